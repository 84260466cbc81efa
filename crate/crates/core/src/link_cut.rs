//! Link/cut trees over a fixed vertex set.
//!
//! Splay-based path decomposition. The cost of edge `(v, parent(v))` is kept
//! at `v`; each splay node also tracks the maximum cost in its subtree, ties
//! going to the shallowest vertex. Roots are never changed except by `link`
//! and `cut`, so no reversal is needed.

use std::ops::Add;

const NIL: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum LinkCutError {
    #[error("vertex {0} is a root")]
    IsRoot(usize),
    #[error("vertex {0} is not a root")]
    NotRoot(usize),
    #[error("vertices {0} and {1} are already in the same tree")]
    SameTree(usize, usize),
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
}

#[derive(Clone, Copy, Debug)]
struct Node<C> {
    left: u32,
    right: u32,
    /// Splay parent, or path parent for the root of a splay tree.
    up: u32,
    /// Node of maximum cost in the splay subtree, NIL if none has a cost.
    best: u32,
    cost: Option<C>,
}

/// Nodes are stored together so one access touches one cache line.
#[derive(Clone, Debug)]
pub struct DynamicTree<C> {
    nodes: Vec<Node<C>>,
}

impl<C: Copy + Ord + Add<Output = C>> DynamicTree<C> {
    /// `n` singleton trees.
    pub fn new(n: usize) -> Self {
        assert!(n < NIL as usize, "too many vertices");
        DynamicTree { nodes: vec![Node { left: NIL, right: NIL, up: NIL, best: NIL, cost: None }; n] }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    fn check(&self, v: usize) -> Result<u32, LinkCutError> {
        if v < self.len() {
            Ok(v as u32)
        } else {
            Err(LinkCutError::OutOfRange(v))
        }
    }

    fn is_splay_root(&self, x: u32) -> bool {
        let p = self.nodes[x as usize].up;
        p == NIL || (self.nodes[p as usize].left != x && self.nodes[p as usize].right != x)
    }

    /// Earlier (shallower) candidates win ties.
    fn better(&self, a: u32, b: u32) -> u32 {
        if a == NIL {
            return b;
        }
        if b == NIL {
            return a;
        }
        if self.nodes[b as usize].cost > self.nodes[a as usize].cost {
            b
        } else {
            a
        }
    }

    fn pull(&mut self, x: u32) {
        let xi = x as usize;
        let l = self.nodes[xi].left;
        let r = self.nodes[xi].right;
        let mut b = if l == NIL { NIL } else { self.nodes[l as usize].best };
        if self.nodes[xi].cost.is_some() {
            b = self.better(b, x);
        }
        if r != NIL {
            b = self.better(b, self.nodes[r as usize].best);
        }
        self.nodes[xi].best = b;
    }

    fn rotate(&mut self, x: u32) {
        let xi = x as usize;
        let p = self.nodes[xi].up;
        let pi = p as usize;
        let g = self.nodes[pi].up;
        if !self.is_splay_root(p) {
            let gi = g as usize;
            if self.nodes[gi].left == p {
                self.nodes[gi].left = x;
            } else {
                self.nodes[gi].right = x;
            }
        }
        self.nodes[xi].up = g;
        if self.nodes[pi].left == x {
            let c = self.nodes[xi].right;
            self.nodes[pi].left = c;
            if c != NIL {
                self.nodes[c as usize].up = p;
            }
            self.nodes[xi].right = p;
        } else {
            let c = self.nodes[xi].left;
            self.nodes[pi].right = c;
            if c != NIL {
                self.nodes[c as usize].up = p;
            }
            self.nodes[xi].left = p;
        }
        self.nodes[pi].up = x;
        self.pull(p);
        self.pull(x);
    }

    fn splay(&mut self, x: u32) {
        while !self.is_splay_root(x) {
            let p = self.nodes[x as usize].up;
            if !self.is_splay_root(p) {
                let g = self.nodes[p as usize].up;
                let zigzig = (self.nodes[g as usize].left == p) == (self.nodes[p as usize].left == x);
                self.rotate(if zigzig { p } else { x });
            }
            self.rotate(x);
        }
    }

    /// Makes the root-to-`v` path preferred; `v` ends at the splay root with
    /// no right child. Returns the last path-parent jump target.
    fn access(&mut self, v: u32) -> u32 {
        let mut last = NIL;
        let mut x = v;
        while x != NIL {
            self.splay(x);
            self.nodes[x as usize].right = last;
            self.pull(x);
            last = x;
            x = self.nodes[x as usize].up;
        }
        self.splay(v);
        last
    }

    pub fn parent(&mut self, v: usize) -> Result<Option<usize>, LinkCutError> {
        let v = self.check(v)?;
        if self.nodes[v as usize].cost.is_none() {
            return Ok(None);
        }
        self.access(v);
        let mut x = self.nodes[v as usize].left;
        while self.nodes[x as usize].right != NIL {
            x = self.nodes[x as usize].right;
        }
        self.splay(x);
        Ok(Some(x as usize))
    }

    pub fn root(&mut self, v: usize) -> Result<usize, LinkCutError> {
        let v = self.check(v)?;
        self.access(v);
        let mut x = v;
        while self.nodes[x as usize].left != NIL {
            x = self.nodes[x as usize].left;
        }
        self.splay(x);
        Ok(x as usize)
    }

    /// Cost of the edge `(v, parent(v))`.
    pub fn cost(&self, v: usize) -> Result<C, LinkCutError> {
        let v = self.check(v)?;
        self.nodes[v as usize].cost.ok_or(LinkCutError::IsRoot(v as usize))
    }

    /// The vertex `u` whose edge `(u, parent(u))` has maximum cost on the
    /// path from `v` to its root; ties go to the vertex nearest the root.
    pub fn maxcost(&mut self, v: usize) -> Result<usize, LinkCutError> {
        let v = self.check(v)?;
        if self.nodes[v as usize].cost.is_none() {
            return Err(LinkCutError::IsRoot(v as usize));
        }
        self.access(v);
        Ok(self.nodes[v as usize].best as usize)
    }

    /// Makes `u` the parent of root `v`, with edge cost `x`.
    pub fn link(&mut self, v: usize, u: usize, x: C) -> Result<(), LinkCutError> {
        let vi = self.check(v)?;
        self.check(u)?;
        if self.nodes[v].cost.is_some() {
            return Err(LinkCutError::NotRoot(v));
        }
        if self.root(u)? == v {
            return Err(LinkCutError::SameTree(v, u));
        }
        self.access(vi);
        self.nodes[v].up = u as u32;
        self.nodes[v].cost = Some(x);
        self.pull(vi);
        Ok(())
    }

    /// Deletes `(v, parent(v))` and returns its cost.
    pub fn cut(&mut self, v: usize) -> Result<C, LinkCutError> {
        let vi = self.check(v)?;
        let c = self.nodes[v].cost.ok_or(LinkCutError::IsRoot(v))?;
        self.access(vi);
        let l = self.nodes[v].left;
        self.nodes[l as usize].up = NIL;
        self.nodes[v].left = NIL;
        self.nodes[v].cost = None;
        self.pull(vi);
        Ok(c)
    }

    /// Adds `x` to the cost of `(v, parent(v))`.
    pub fn update_edge(&mut self, v: usize, x: C) -> Result<(), LinkCutError> {
        let vi = self.check(v)?;
        let c = self.nodes[v].cost.ok_or(LinkCutError::IsRoot(v))?;
        self.access(vi);
        self.nodes[v].cost = Some(c + x);
        self.pull(vi);
        Ok(())
    }

    /// Lowest common ancestor, or `None` if `v` and `u` are in different trees.
    pub fn lca(&mut self, v: usize, u: usize) -> Result<Option<usize>, LinkCutError> {
        let vi = self.check(v)?;
        let ui = self.check(u)?;
        if self.root(v)? != self.root(u)? {
            return Ok(None);
        }
        self.access(ui);
        Ok(Some(self.access(vi) as usize))
    }
}
