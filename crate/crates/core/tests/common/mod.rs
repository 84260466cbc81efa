//! Helpers shared by the integration tests and the acceptance runner.
#![allow(dead_code)]

use proxi_core::link_cut::DynamicTree;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Parent-array forest answering the same queries as [`DynamicTree`] by
/// walking to the root.
pub struct NaiveForest {
    parent: Vec<Option<usize>>,
    cost: Vec<i64>,
}

impl NaiveForest {
    pub fn new(n: usize) -> Self {
        NaiveForest { parent: vec![None; n], cost: vec![0; n] }
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn root(&self, mut v: usize) -> usize {
        while let Some(p) = self.parent[v] {
            v = p;
        }
        v
    }

    pub fn cost(&self, v: usize) -> Option<i64> {
        self.parent[v].map(|_| self.cost[v])
    }

    /// Ties go to the vertex nearest the root.
    pub fn maxcost(&self, mut v: usize) -> Option<usize> {
        let mut best: Option<usize> = None;
        while let Some(p) = self.parent[v] {
            if best.is_none_or(|b| self.cost[v] >= self.cost[b]) {
                best = Some(v);
            }
            v = p;
        }
        best
    }

    pub fn link(&mut self, v: usize, u: usize, x: i64) {
        self.parent[v] = Some(u);
        self.cost[v] = x;
    }

    pub fn cut(&mut self, v: usize) -> i64 {
        self.parent[v] = None;
        self.cost[v]
    }

    pub fn update_edge(&mut self, v: usize, x: i64) {
        self.cost[v] += x;
    }

    pub fn lca(&self, v: usize, u: usize) -> Option<usize> {
        let mut seen = std::collections::HashSet::new();
        let mut x = v;
        seen.insert(x);
        while let Some(p) = self.parent[x] {
            x = p;
            seen.insert(x);
        }
        let mut y = u;
        loop {
            if seen.contains(&y) {
                return Some(y);
            }
            y = self.parent[y]?;
        }
    }
}

/// Runs `ops` random valid operations on both structures and returns the
/// number of queries whose answers differ.
pub fn link_cut_differential(n: usize, ops: usize, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fast = DynamicTree::<i64>::new(n);
    let mut slow = NaiveForest::new(n);
    let mut mismatches = 0;
    let mut check = |ok: bool| {
        if !ok {
            mismatches += 1;
        }
    };
    for _ in 0..ops {
        let v = rng.gen_range(0..n);
        let u = rng.gen_range(0..n);
        match rng.gen_range(0..8) {
            0 | 1 => {
                if slow.parent(v).is_none() && slow.root(u) != v {
                    let x = rng.gen_range(-50..50);
                    check(fast.link(v, u, x).is_ok());
                    slow.link(v, u, x);
                } else {
                    check(fast.link(v, u, 0).is_err());
                }
            }
            2 => {
                if slow.parent(v).is_some() {
                    check(fast.cut(v).ok() == Some(slow.cut(v)));
                } else {
                    check(fast.cut(v).is_err());
                }
            }
            3 => {
                if slow.parent(v).is_some() {
                    let x = rng.gen_range(-20..20);
                    check(fast.update_edge(v, x).is_ok());
                    slow.update_edge(v, x);
                }
            }
            4 => check(fast.parent(v).ok() == Some(slow.parent(v))),
            5 => check(fast.root(v).ok() == Some(slow.root(v))),
            6 => {
                check(fast.cost(v).ok() == slow.cost(v));
                check(fast.maxcost(v).ok() == slow.maxcost(v));
            }
            _ => check(fast.lca(v, u).ok() == Some(slow.lca(v, u))),
        }
    }
    mismatches
}
