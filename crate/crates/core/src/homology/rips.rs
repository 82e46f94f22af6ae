//! Rips persistence without materializing triangles.
//!
//! Dimension-0 pairs come from a union-find sweep over the sorted edges.
//! Dimension-1 pairs come from reducing the *coboundary* columns of the
//! non-tree edges in reverse filtration order — the anti-transpose of the
//! standard reduction, which produces the identical diagram. Triangle
//! entries are enumerated on demand from the distance matrix, so the
//! memory footprint stays at the edge list even when the clique count is
//! astronomically larger. Columns whose minimal cofacet shares their
//! filtration value pair off immediately (a zero-persistence pair) without
//! assembling the column at all; in practice that covers the vast majority
//! of columns.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::embed::{enclosing_radius, DistanceMatrix};
use crate::{Error, Result};

use super::diagram::{Feature, PersistenceDiagram};

#[derive(Debug, Clone, Copy)]
struct Edge {
    diam: f64,
    a: u32,
    b: u32,
}

/// Triangle keyed by `(filtration value, vertex tuple)` — the pivot order.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Tri {
    diam: f64,
    v: [u32; 3],
}

impl Eq for Tri {}

impl Ord for Tri {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.diam.total_cmp(&other.diam).then(self.v.cmp(&other.v))
    }
}

impl PartialOrd for Tri {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

fn sorted3(a: u32, b: u32, k: u32) -> [u32; 3] {
    let mut v = [a, b, k];
    v.sort_unstable();
    v
}

struct UnionFind {
    parent: Vec<u32>,
    rank: Vec<u8>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, x: u32) -> u32 {
        let mut root = x;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = x;
        while self.parent[cur as usize] != root {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, x: u32, y: u32) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return;
        }
        match self.rank[rx as usize].cmp(&self.rank[ry as usize]) {
            std::cmp::Ordering::Less => self.parent[rx as usize] = ry,
            std::cmp::Ordering::Greater => self.parent[ry as usize] = rx,
            std::cmp::Ordering::Equal => {
                self.parent[ry as usize] = rx;
                self.rank[rx as usize] += 1;
            }
        }
    }
}

/// Persistent homology (dimensions 0 and 1) of the Rips filtration of a
/// distance matrix, equal as a diagram to
/// [`persistence`](super::persistence) of
/// [`rips_filtration`](super::rips_filtration) at the same threshold.
///
/// `None` truncates at the enclosing radius.
pub fn rips_persistence(
    m: &DistanceMatrix,
    threshold: Option<f64>,
) -> Result<PersistenceDiagram> {
    let n = m.size();
    if n == 0 {
        return Err(Error::Domain("cannot compute persistence of zero points".into()));
    }
    let threshold = match threshold {
        Some(t) if t.is_nan() || t <= 0.0 => {
            return Err(Error::Domain(format!("threshold must be > 0, got {t}")))
        }
        Some(t) => t,
        None => enclosing_radius(m).max(0.0),
    };

    // dense mirror of the distance matrix for O(1) row-slice access in the
    // coboundary enumeration, the innermost loop of the whole crate
    let mut dist = vec![0.0_f64; n * n];
    for a in 0..n {
        for b in (a + 1)..n {
            let d = m.get(a, b);
            dist[a * n + b] = d;
            dist[b * n + a] = d;
        }
    }

    let mut edges: Vec<Edge> = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            let diam = dist[a * n + b];
            if diam <= threshold {
                edges.push(Edge {
                    diam,
                    a: a as u32,
                    b: b as u32,
                });
            }
        }
    }
    edges.sort_by(|x, y| x.diam.total_cmp(&y.diam).then((x.a, x.b).cmp(&(y.a, y.b))));

    let mut features = Vec::new();

    // dimension 0: Kruskal sweep; non-tree edges feed the dim-1 reduction
    let mut uf = UnionFind::new(n);
    let mut columns: Vec<usize> = Vec::new();
    for (idx, e) in edges.iter().enumerate() {
        if uf.find(e.a) != uf.find(e.b) {
            uf.union(e.a, e.b);
            features.push(Feature {
                birth: 0.0,
                death: e.diam,
                dim: 0,
            });
        } else {
            columns.push(idx);
        }
    }
    let components = (0..n as u32).filter(|&v| uf.find(v) == v).count();
    for _ in 0..components {
        features.push(Feature {
            birth: 0.0,
            death: f64::INFINITY,
            dim: 0,
        });
    }

    // dimension 1: implicit coboundary reduction, columns in reverse
    // filtration order
    let mut reducer = CoboundaryReducer {
        dist: &dist,
        n: n as u32,
        threshold,
        edges: &edges,
        pivot_owner: HashMap::new(),
        chains: Vec::new(),
    };
    for &col in columns.iter().rev() {
        if let Some(feature) = reducer.reduce_column(col) {
            features.push(feature);
        }
    }

    Ok(PersistenceDiagram::from_features(features))
}

struct CoboundaryReducer<'a> {
    /// dense n×n distances, row-major
    dist: &'a [f64],
    n: u32,
    threshold: f64,
    edges: &'a [Edge],
    /// pivot triangle -> index into `chains` of the column that owns it
    pivot_owner: HashMap<[u32; 3], usize>,
    /// columns kept for later additions, each stored as the list of edges
    /// whose coboundaries sum to the reduced column
    chains: Vec<Vec<usize>>,
}

impl CoboundaryReducer<'_> {
    /// Collects every cofacet triangle of `edge` into `out`.
    fn expand(&self, edge: usize, out: &mut Vec<Tri>) {
        let e = self.edges[edge];
        let n = self.n as usize;
        let row_a = &self.dist[e.a as usize * n..e.a as usize * n + n];
        let row_b = &self.dist[e.b as usize * n..e.b as usize * n + n];
        for k in 0..n {
            if k == e.a as usize || k == e.b as usize {
                continue;
            }
            let dak = row_a[k];
            let dbk = row_b[k];
            if dak > self.threshold || dbk > self.threshold {
                continue;
            }
            out.push(Tri {
                diam: e.diam.max(dak).max(dbk),
                v: sorted3(e.a, e.b, k as u32),
            });
        }
    }

    /// Reduces one coboundary column; returns its dim-1 feature when the
    /// pivot search settles (a finite bar) or the column vanishes (an
    /// essential class).
    fn reduce_column(&mut self, col: usize) -> Option<Feature> {
        let e = self.edges[col];
        let n = self.n as usize;
        let row_a = &self.dist[e.a as usize * n..e.a as usize * n + n];
        let row_b = &self.dist[e.b as usize * n..e.b as usize * n + n];

        // shortcut: cofacets are enumerated in pivot order among those
        // sharing the edge's own diameter (any cofacet is at least as
        // large), so the first same-diameter cofacet *is* the column's
        // pivot; if unclaimed, the pair is immediate and zero-persistence.
        let mut entries: Vec<Tri> = Vec::new();
        let mut shortcut = None;
        let mut first_equal_seen = false;
        for k in 0..n {
            if k == e.a as usize || k == e.b as usize {
                continue;
            }
            let dak = row_a[k];
            let dbk = row_b[k];
            if dak > self.threshold || dbk > self.threshold {
                continue;
            }
            let tri = Tri {
                diam: e.diam.max(dak).max(dbk),
                v: sorted3(e.a, e.b, k as u32),
            };
            if !first_equal_seen && tri.diam == e.diam {
                first_equal_seen = true;
                if !self.pivot_owner.contains_key(&tri.v) {
                    shortcut = Some(tri);
                    break;
                }
            }
            entries.push(tri);
        }
        if let Some(tri) = shortcut {
            self.chains.push(vec![col]);
            self.pivot_owner.insert(tri.v, self.chains.len() - 1);
            // birth == death: dropped by the diagram constructor anyway
            return None;
        }

        let mut heap: BinaryHeap<Reverse<Tri>> =
            entries.into_iter().map(Reverse).collect();
        let mut chain = vec![col];
        let mut scratch: Vec<Tri> = Vec::new();
        loop {
            let Some(pivot) = pop_pivot(&mut heap) else {
                // column reduced to zero: the class never dies
                return Some(Feature {
                    birth: e.diam,
                    death: f64::INFINITY,
                    dim: 1,
                });
            };
            match self.pivot_owner.get(&pivot.v) {
                Some(&owner) => {
                    // restore the popped pivot, then add the owning column;
                    // the duplicate pair cancels on later pops
                    heap.push(Reverse(pivot));
                    scratch.clear();
                    for &other in self.chains[owner].clone().iter() {
                        self.expand(other, &mut scratch);
                        chain.push(other);
                    }
                    heap.extend(scratch.drain(..).map(Reverse));
                }
                None => {
                    self.chains.push(chain);
                    self.pivot_owner.insert(pivot.v, self.chains.len() - 1);
                    return Some(Feature {
                        birth: e.diam,
                        death: pivot.diam,
                        dim: 1,
                    });
                }
            }
        }
    }
}

/// Pops the minimal entry with odd multiplicity, consuming cancelling
/// pairs along the way.
fn pop_pivot(heap: &mut BinaryHeap<Reverse<Tri>>) -> Option<Tri> {
    while let Some(Reverse(top)) = heap.pop() {
        let mut count = 1usize;
        while heap.peek() == Some(&Reverse(top)) {
            heap.pop();
            count += 1;
        }
        if count % 2 == 1 {
            return Some(top);
        }
    }
    None
}
