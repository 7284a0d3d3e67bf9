//! Coset-leader tables by breadth-first search over the syndrome space.
//!
//! When every word of weight `w` is a sum of `w` "atoms" of weight one (single
//! nonzero coordinates in the Hamming metric, rank-one blocks in the sum-rank
//! metric) and weight is subadditive, the minimum weight of a coset equals the
//! BFS depth of its syndrome in the Cayley graph generated by the atoms'
//! syndromes.

use std::collections::VecDeque;

use crate::spaces::{packed_add, packed_neg};

pub const UNREACHED: u8 = u8::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Metric {
    Hamming,
    SumRank,
}

/// Minimum coset weight per syndrome, packed little-endian base `q` over the codimension.
#[derive(Debug, Clone)]
pub struct CosetLeaderTable {
    pub metric: Metric,
    pub q: u64,
    pub codim: usize,
    p: u32,
    weights: Vec<u8>,
    /// Atom used to reach each syndrome, `u32::MAX` at the root.
    via: Vec<u32>,
}

impl CosetLeaderTable {
    /// BFS from the zero syndrome. `atoms[i]` is the packed syndrome of atom `i`.
    pub fn build(metric: Metric, p: u32, q: u64, codim: usize, atoms: &[u64]) -> CosetLeaderTable {
        let size = (q.pow(codim as u32)) as usize;
        let mut weights = vec![UNREACHED; size];
        let mut via = vec![u32::MAX; size];
        let mut queue = VecDeque::new();
        weights[0] = 0;
        queue.push_back(0u64);
        while let Some(s) = queue.pop_front() {
            let w = weights[s as usize];
            for (i, &a) in atoms.iter().enumerate() {
                let next = packed_add(p, s, a) as usize;
                if weights[next] == UNREACHED {
                    weights[next] = w + 1;
                    via[next] = i as u32;
                    queue.push_back(next as u64);
                }
            }
        }
        CosetLeaderTable { metric, q, codim, p, weights, via }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Minimum weight in the coset, `None` if the coset is unreachable from the atoms.
    pub fn weight(&self, syndrome: u64) -> Option<usize> {
        match self.weights[syndrome as usize] {
            UNREACHED => None,
            w => Some(w as usize),
        }
    }

    pub fn weights(&self) -> &[u8] {
        &self.weights
    }

    pub fn all_reached(&self) -> bool {
        !self.weights.contains(&UNREACHED)
    }

    /// Maximum coset weight; `None` if some coset was not reached.
    pub fn covering_radius(&self) -> Option<usize> {
        if !self.all_reached() {
            return None;
        }
        self.weights.iter().max().map(|&w| w as usize)
    }

    /// Smallest syndrome attaining the covering radius.
    pub fn deepest_syndrome(&self) -> Option<u64> {
        let r = self.covering_radius()? as u8;
        self.weights.iter().position(|&w| w == r).map(|i| i as u64)
    }

    /// Atom indices whose sum is a minimum-weight word with this syndrome.
    pub fn leader_atoms(&self, syndrome: u64, atoms: &[u64]) -> Option<Vec<usize>> {
        self.weight(syndrome)?;
        let mut out = Vec::new();
        let mut s = syndrome;
        while s != 0 {
            let i = self.via[s as usize] as usize;
            out.push(i);
            s = packed_add(self.p, s, packed_neg(self.p, atoms[i]));
        }
        out.reverse();
        Some(out)
    }

    /// Number of cosets per weight.
    pub fn weight_distribution(&self) -> Vec<u64> {
        let max = self.weights.iter().filter(|&&w| w != UNREACHED).max().copied().unwrap_or(0);
        let mut out = vec![0u64; max as usize + 1];
        for &w in &self.weights {
            if w != UNREACHED {
                out[w as usize] += 1;
            }
        }
        out
    }
}
