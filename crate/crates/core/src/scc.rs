//! Compressed adjacency and an iterative Tarjan SCC pass.

/// Compressed sparse row adjacency.
#[derive(Debug, Clone, Default)]
pub(crate) struct Csr {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Csr {
    /// Builds from `(from, to)` arcs over `n` vertices, keeping arc order per vertex.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Self {
        let mut offsets = vec![0usize; n + 1];
        for &(a, _) in arcs {
            offsets[a + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0usize; arcs.len()];
        for &(a, b) in arcs {
            targets[fill[a]] = b;
            fill[a] += 1;
        }
        Self { offsets, targets }
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn reversed(&self) -> Self {
        let n = self.vertex_count();
        let mut arcs = Vec::with_capacity(self.targets.len());
        for a in 0..n {
            for &b in self.neighbors(a) {
                arcs.push((b, a));
            }
        }
        Self::from_arcs(n, &arcs)
    }

    /// Marks every vertex reachable from `seeds` (seeds included).
    pub fn reachable_from(&self, seeds: impl IntoIterator<Item = usize>) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count()];
        let mut stack: Vec<usize> = Vec::new();
        for s in seeds {
            if !seen[s] {
                seen[s] = true;
                stack.push(s);
            }
        }
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }
}

/// Component index per vertex. Components are numbered in the order Tarjan
/// completes them, which is a reverse topological order of the condensation.
pub(crate) fn tarjan(g: &Csr) -> (Vec<usize>, usize) {
    const NONE: usize = usize::MAX;
    let n = g.vertex_count();
    let mut index = vec![NONE; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![NONE; n];
    let mut scc_stack: Vec<usize> = Vec::new();
    // (vertex, next neighbor position)
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut counter = 0;
    let mut n_comp = 0;

    for root in 0..n {
        if index[root] != NONE {
            continue;
        }
        call.push((root, 0));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        scc_stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            let nbrs = g.neighbors(v);
            if *pos < nbrs.len() {
                let w = nbrs[*pos];
                *pos += 1;
                if index[w] == NONE {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    scc_stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = scc_stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        comp[w] = n_comp;
                        if w == v {
                            break;
                        }
                    }
                    n_comp += 1;
                }
            }
        }
    }
    (comp, n_comp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_cycles_and_a_bridge() {
        // 0<->1 -> 2<->3, 4 isolated
        let g = Csr::from_arcs(5, &[(0, 1), (1, 0), (1, 2), (2, 3), (3, 2)]);
        let (comp, k) = tarjan(&g);
        assert_eq!(k, 3);
        assert_eq!(comp[0], comp[1]);
        assert_eq!(comp[2], comp[3]);
        assert_ne!(comp[0], comp[2]);
        // sink component completes first
        assert!(comp[2] < comp[0]);
    }

    #[test]
    fn long_path_does_not_recurse() {
        let n = 200_000;
        let arcs: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).chain([(n - 1, 0)]).collect();
        let (comp, k) = tarjan(&Csr::from_arcs(n, &arcs));
        assert_eq!(k, 1);
        assert!(comp.iter().all(|&c| c == 0));
    }

    #[test]
    fn reachability() {
        let g = Csr::from_arcs(4, &[(0, 1), (1, 2)]);
        assert_eq!(g.reachable_from([1]), vec![false, true, true, false]);
        assert_eq!(g.reversed().reachable_from([1]), vec![true, true, false, false]);
    }
}
