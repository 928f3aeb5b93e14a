//! Clique search on small compatibility graphs.
//!
//! Root branches are explored in parallel; results are sorted before they are
//! returned, so output never depends on scheduling.

use rayon::prelude::*;

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn has(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_not(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| k * 64 + b)
        })
    }
}

/// Symmetric adjacency over vertices `0..n`; `edge(i, i)` marks admissible vertices.
pub struct Graph {
    n: usize,
    nbrs: Vec<Bits>,
    admissible: Bits,
}

impl Graph {
    pub fn new(n: usize, edge: impl Fn(usize, usize) -> bool) -> Self {
        let mut admissible = Bits::empty(n);
        let mut nbrs = vec![Bits::empty(n); n];
        for i in 0..n {
            if edge(i, i) {
                admissible.set(i);
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if admissible.has(i) && admissible.has(j) && edge(i, j) {
                    nbrs[i].set(j);
                    nbrs[j].set(i);
                }
            }
        }
        Graph {
            n,
            nbrs,
            admissible,
        }
    }

    /// All cliques with exactly `k` vertices, each sorted, in lexicographic order.
    pub fn cliques_of_size(&self, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![Vec::new()];
        }
        let mut out: Vec<Vec<usize>> = (0..self.n)
            .into_par_iter()
            .filter(|&v| self.admissible.has(v))
            .flat_map_iter(|v| {
                let mut later = Bits::empty(self.n);
                for u in v + 1..self.n {
                    later.set(u);
                }
                let cand = self.nbrs[v].and(&later);
                let mut found = Vec::new();
                let mut stack = vec![v];
                self.extend_k(&mut stack, cand, k, &mut found);
                found
            })
            .collect();
        out.sort();
        out
    }

    fn extend_k(&self, stack: &mut Vec<usize>, cand: Bits, k: usize, out: &mut Vec<Vec<usize>>) {
        if stack.len() == k {
            out.push(stack.clone());
            return;
        }
        if stack.len() + cand.count() < k {
            return;
        }
        for u in cand.iter().collect::<Vec<_>>() {
            let mut later = Bits::empty(self.n);
            for w in u + 1..self.n {
                later.set(w);
            }
            stack.push(u);
            self.extend_k(stack, cand.and(&self.nbrs[u]).and(&later), k, out);
            stack.pop();
        }
    }

    /// All maximal cliques among admissible vertices (Bron-Kerbosch with
    /// pivoting below the root).
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let verts: Vec<usize> = self.admissible.iter().filter(|&v| v < self.n).collect();
        let mut out: Vec<Vec<usize>> = verts
            .par_iter()
            .enumerate()
            .flat_map_iter(|(pos, &v)| {
                let mut before = Bits::empty(self.n);
                let mut after = Bits::empty(self.n);
                for &u in &verts[..pos] {
                    before.set(u);
                }
                for &u in &verts[pos + 1..] {
                    after.set(u);
                }
                let p = self.nbrs[v].and(&after);
                let x = self.nbrs[v].and(&before);
                let mut found = Vec::new();
                self.bron_kerbosch(&mut vec![v], p, x, &mut found);
                found
            })
            .collect();
        for c in &mut out {
            c.sort();
        }
        out.sort();
        out
    }

    fn bron_kerbosch(&self, r: &mut Vec<usize>, p: Bits, mut x: Bits, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() && x.is_empty() {
            out.push(r.clone());
            return;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .max_by_key(|&u| p.and(&self.nbrs[u]).count())
            .expect("p or x is nonempty");
        let mut p = p;
        for v in p.and_not(&self.nbrs[pivot]).iter().collect::<Vec<_>>() {
            r.push(v);
            self.bron_kerbosch(r, p.and(&self.nbrs[v]), x.and(&self.nbrs[v]), out);
            r.pop();
            p.0[v / 64] &= !(1 << (v % 64));
            x.set(v);
        }
    }
}
