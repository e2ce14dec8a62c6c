use std::fmt;

use catalattice::perm::{avoids_312, perm_to_spio, spio_to_perm};
use catalattice::tree::{dyck_to_tree, rho, rho_inverse, tree_to_dyck};
use catalattice::{DyckPath, Error, Permutation, PlanarTree, Result, Spio};
use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Spio,
    Tree,
    Perm,
    Path,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Spio => "spio",
            Kind::Tree => "tree",
            Kind::Perm => "perm",
            Kind::Path => "path",
        })
    }
}

/// One Catalan object in any of its four guises.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Spio(Spio),
    Tree(PlanarTree),
    Perm(Permutation),
    Path(DyckPath),
}

impl Object {
    /// `{…}` is a poset, parentheses (or nothing) a tree, `U`/`D` a path,
    /// digits and commas a permutation.
    pub fn infer_kind(text: &str) -> Kind {
        let t = text.trim();
        if t.starts_with('{') {
            Kind::Spio
        } else if t.chars().all(|c| c == '(' || c == ')') {
            Kind::Tree
        } else if t.chars().all(|c| c == 'U' || c == 'D') {
            Kind::Path
        } else {
            Kind::Perm
        }
    }

    pub fn parse(text: &str, kind: Option<Kind>) -> Result<Object> {
        let kind = kind.unwrap_or_else(|| Self::infer_kind(text));
        Ok(match kind {
            Kind::Spio => Object::Spio(text.parse()?),
            Kind::Tree => Object::Tree(text.parse()?),
            Kind::Perm => Object::Perm(text.parse()?),
            Kind::Path => Object::Path(text.parse()?),
        })
    }

    pub fn kind(&self) -> Kind {
        match self {
            Object::Spio(_) => Kind::Spio,
            Object::Tree(_) => Kind::Tree,
            Object::Perm(_) => Kind::Perm,
            Object::Path(_) => Kind::Path,
        }
    }

    /// Size of the underlying poset.
    pub fn size(&self) -> usize {
        match self {
            Object::Spio(s) => s.n(),
            Object::Tree(t) => t.size(),
            Object::Perm(p) => p.n(),
            Object::Path(p) => p.size(),
        }
    }

    /// The canonically labelled poset this object corresponds to.
    pub fn to_spio(&self) -> Result<Spio> {
        match self {
            Object::Spio(s) => Ok(s.relabel_by_preorder()),
            Object::Tree(t) => Ok(rho(t)),
            Object::Perm(p) => perm_to_spio(p),
            Object::Path(p) => Ok(rho(&dyck_to_tree(p))),
        }
    }

    pub fn from_spio(s: &Spio, kind: Kind) -> Result<Object> {
        let s = if s.is_canonical() {
            s.clone()
        } else {
            s.relabel_by_preorder()
        };
        Ok(match kind {
            Kind::Spio => Object::Spio(s),
            Kind::Tree => Object::Tree(rho_inverse(&s)?),
            Kind::Perm => Object::Perm(spio_to_perm(&s)?),
            Kind::Path => Object::Path(tree_to_dyck(&rho_inverse(&s)?)),
        })
    }

    pub fn convert(&self, kind: Kind) -> Result<Object> {
        if kind == self.kind() && !matches!(self, Object::Spio(_)) {
            return Ok(self.clone());
        }
        Object::from_spio(&self.to_spio()?, kind)
    }

    pub fn as_tree(&self) -> Result<PlanarTree> {
        match self.convert(Kind::Tree)? {
            Object::Tree(t) => Ok(t),
            _ => unreachable!(),
        }
    }

    /// Permutation form; any permutation is accepted as is, other kinds go
    /// through the bijection onto `Av(312)`.
    pub fn as_perm(&self) -> Result<Permutation> {
        match self {
            Object::Perm(p) => Ok(p.clone()),
            other => match Object::from_spio(&other.to_spio()?, Kind::Perm)? {
                Object::Perm(p) => Ok(p),
                _ => unreachable!(),
            },
        }
    }

    pub fn require_avoider(&self) -> Result<()> {
        match self {
            Object::Perm(p) if !avoids_312(p) => Err(Error::Not312Avoiding(p.to_string())),
            _ => Ok(()),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Object::Spio(s) => serde_json::to_value(s.to_document()).expect("plain data"),
            other => serde_json::Value::String(other.to_string()),
        }
    }
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Object::Spio(s) => s.fmt(f),
            Object::Tree(t) => t.fmt(f),
            Object::Perm(p) => p.fmt(f),
            Object::Path(p) => p.fmt(f),
        }
    }
}
