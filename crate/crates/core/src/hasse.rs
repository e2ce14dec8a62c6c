//! Hasse diagrams of the four orders, with DOT and JSON output.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::orders::{CatalanOrder, OrderTable};
use crate::perm::spio_to_perm;
use crate::spio::Spio;
use crate::tree::rho_inverse;

/// Vertices are text encodings sorted lexicographically (trees for Dyck
/// and Tamari, permutations for the Bruhat orders); `covers` holds
/// `[i, j]` when `elements[i]` is covered by `elements[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseDiagram {
    pub order: CatalanOrder,
    pub n: usize,
    pub elements: Vec<String>,
    pub covers: Vec<[usize; 2]>,
}

pub fn encode_element(order: CatalanOrder, s: &Spio) -> Result<String> {
    if order.is_bruhat() {
        Ok(spio_to_perm(s)?.to_string())
    } else {
        Ok(rho_inverse(s)?.encode())
    }
}

impl HasseDiagram {
    pub fn from_table(table: &OrderTable) -> Result<Self> {
        let order = table.order();
        let encoded = table
            .elements()
            .iter()
            .map(|s| encode_element(order, s))
            .collect::<Result<Vec<_>>>()?;
        let mut perm: Vec<usize> = (0..encoded.len()).collect();
        perm.sort_by(|&a, &b| encoded[a].cmp(&encoded[b]));
        let m = perm.len();
        let lt = |i: usize, j: usize| i != j && table.leq(perm[i], perm[j]);
        let mut covers = Vec::new();
        for i in 0..m {
            for j in 0..m {
                if lt(i, j) && !(0..m).any(|k| lt(i, k) && lt(k, j)) {
                    covers.push([i, j]);
                }
            }
        }
        Ok(HasseDiagram {
            order,
            n: table.n(),
            elements: perm.iter().map(|&i| encoded[i].clone()).collect(),
            covers,
        })
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph {} {{", self.order).unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        for (i, e) in self.elements.iter().enumerate() {
            writeln!(out, "  v{i} [label=\"{e}\"];").unwrap();
        }
        for [i, j] in &self.covers {
            writeln!(out, "  v{i} -> v{j};").unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    /// Transitive closure of the covers, as strict pairs.
    pub fn comparabilities(&self) -> Vec<[usize; 2]> {
        let m = self.elements.len();
        let mut reach = vec![vec![false; m]; m];
        for [i, j] in &self.covers {
            reach[*i][*j] = true;
        }
        for k in 0..m {
            let via = reach[k].clone();
            for row in reach.iter_mut().filter(|row| row[k]) {
                for (cell, &v) in row.iter_mut().zip(&via) {
                    *cell |= v;
                }
            }
        }
        (0..m)
            .flat_map(|i| (0..m).map(move |j| [i, j]))
            .filter(|&[i, j]| reach[i][j])
            .collect()
    }
}

pub fn hasse(order: CatalanOrder, n: usize) -> Result<HasseDiagram> {
    HasseDiagram::from_table(&OrderTable::build(order, n)?)
}
