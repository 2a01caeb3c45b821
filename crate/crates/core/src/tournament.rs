//! Tournaments, generators and exact cycle counting.
//!
//! Vertices are `0..n`. Adjacency is stored as one out-neighbour bitset per
//! vertex, so `beats(i, j)` is a single word lookup.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::tournamenton::StepTournamenton;
use crate::{Error, Result};

/// Largest cycle length accepted by the exact counter. The per-subset table
/// has `2^(len-1) * (len-1)` entries.
pub const MAX_EXACT_LENGTH: usize = 24;

/// An orientation of the complete graph on `n` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    words: usize,
    out: Vec<u64>,
}

impl Tournament {
    /// Builds a tournament from an orientation rule: for every pair `i < j`,
    /// `forward(i, j)` decides whether the edge is `i -> j` (else `j -> i`).
    pub fn from_orientation(n: usize, mut forward: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("a tournament needs at least one vertex"));
        }
        let words = n.div_ceil(64);
        let mut t = Tournament {
            n,
            words,
            out: vec![0; n * words],
        };
        for i in 0..n {
            for j in i + 1..n {
                if forward(i, j) {
                    t.set_edge(i, j);
                } else {
                    t.set_edge(j, i);
                }
            }
        }
        Ok(t)
    }

    /// Builds a tournament from a full 0/1 adjacency matrix, checking that
    /// the diagonal is empty and every pair is oriented exactly once.
    pub fn from_adjacency(rows: &[Vec<bool>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::invalid("a tournament needs at least one vertex"));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Invariant(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if row[i] {
                return Err(Error::Invariant(format!("vertex {i} beats itself")));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if rows[i][j] == rows[j][i] {
                    return Err(Error::Invariant(format!(
                        "pair ({i}, {j}) must be oriented exactly once"
                    )));
                }
            }
        }
        Tournament::from_orientation(n, |i, j| rows[i][j])
    }

    fn set_edge(&mut self, from: usize, to: usize) {
        self.out[from * self.words + to / 64] |= 1 << (to % 64);
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// True iff the edge `i -> j` is present.
    #[inline]
    pub fn beats(&self, i: usize, j: usize) -> bool {
        self.out[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.out[i * self.words..(i + 1) * self.words]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn out_neighbours(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&j| self.beats(i, j))
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence {
            out_degrees: (0..self.n).map(|i| self.out_degree(i)).collect(),
        }
    }

    /// The tournament with every edge reversed.
    pub fn reversed(&self) -> Tournament {
        Tournament::from_orientation(self.n, |i, j| !self.beats(i, j)).expect("n >= 1")
    }

    /// The subtournament induced on `vertices` (in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Result<Tournament> {
        if let Some(&v) = vertices.iter().find(|&&v| v >= self.n) {
            return Err(Error::invalid(format!("vertex {v} out of range")));
        }
        Tournament::from_orientation(vertices.len(), |a, b| self.beats(vertices[a], vertices[b]))
    }

    /// Serializes to the text format: `n`, then `n` rows of `0`/`1`.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                s.push(if self.beats(i, j) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tournament({})", self.to_text().replace('\n', " ").trim_end())
    }
}

impl FromStr for Tournament {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::parse(line, format!("expected vertex count, found {header:?}")))?;
        if n == 0 {
            return Err(Error::parse(line, "vertex count must be positive"));
        }
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let (line, text) = lines
                .next()
                .ok_or_else(|| Error::parse(line + i + 1, format!("expected {n} rows, found {i}")))?;
            if text.chars().count() != n {
                return Err(Error::parse(line, format!("expected {n} characters")));
            }
            let row = text
                .chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    other => Err(Error::parse(line, format!("unexpected character {other:?}"))),
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::parse(line, "trailing content after matrix"));
        }
        Tournament::from_adjacency(&rows)
    }
}

/// Out-degrees of a tournament.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSequence {
    pub out_degrees: Vec<usize>,
}

impl DegreeSequence {
    pub fn is_regular(&self) -> bool {
        self.out_degrees.windows(2).all(|w| w[0] == w[1])
    }
}

/// Counts of induced 4-vertex subtournaments by isomorphism type.
///
/// `t4` is the transitive tournament, `c4` the Hamiltonian one, `l4` a
/// 3-cycle plus a sink and `w4` a 3-cycle plus a source.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourProfile {
    pub t4: u64,
    pub c4: u64,
    pub l4: u64,
    pub w4: u64,
}

impl FourProfile {
    pub fn total(&self) -> u64 {
        self.t4 + self.c4 + self.l4 + self.w4
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FourType {
    Transitive,
    Hamiltonian,
    CycleWithSink,
    CycleWithSource,
}

/// Classifies a 4-vertex tournament from its local out-degrees.
///
/// A 4-vertex tournament has `4 - sum C(d_i, 2)` cyclic triangles: none for
/// T^4, two for C^4, and one for L^4 and W^4, which differ in having a sink
/// or a source.
pub fn classify_four(out_degrees: [usize; 4]) -> FourType {
    let pairs: usize = out_degrees.iter().map(|&d| d * d.saturating_sub(1) / 2).sum();
    match 4 - pairs {
        0 => FourType::Transitive,
        2 => FourType::Hamiltonian,
        _ if out_degrees.contains(&0) => FourType::CycleWithSink,
        _ => FourType::CycleWithSource,
    }
}

/// The carousel tournament on `n` (odd) vertices: vertex `i` beats
/// `i+1, ..., i+(n-1)/2` modulo `n`.
pub fn make_carousel(n: usize) -> Result<Tournament> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::invalid(format!(
            "carousel tournaments need an odd order >= 3, got {n}"
        )));
    }
    let half = (n - 1) / 2;
    Tournament::from_orientation(n, |i, j| j - i <= half)
}

/// The transitive tournament: `i -> j` iff `i < j`.
pub fn make_transitive(n: usize) -> Result<Tournament> {
    Tournament::from_orientation(n, |_, _| true)
}

/// A uniformly random tournament, reproducible from `seed`.
pub fn sample_random(n: usize, seed: u64) -> Result<Tournament> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Tournament::from_orientation(n, |_, _| rng.gen_bool(0.5))
}

/// A W-random tournament together with the sampled coordinates.
#[derive(Debug, Clone)]
pub struct WRandomSample {
    pub tournament: Tournament,
    pub coords: Vec<f64>,
}

/// Samples an `n`-vertex W-random tournament: each vertex draws a uniform
/// coordinate `x_i`, then each pair `i < j` is oriented `i -> j` with
/// probability `W(x_i, x_j)`.
pub fn sample_w_random(w: &StepTournamenton, n: usize, seed: u64) -> Result<Tournament> {
    sample_w_random_with_coords(w, n, seed).map(|s| s.tournament)
}

pub fn sample_w_random_with_coords(w: &StepTournamenton, n: usize, seed: u64) -> Result<WRandomSample> {
    if n == 0 {
        return Err(Error::invalid("a tournament needs at least one vertex"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coords: Vec<f64> = (0..n).map(|_| rng.gen::<f64>()).collect();
    let tournament = Tournament::from_orientation(n, |i, j| {
        let p = w.eval(coords[i], coords[j]);
        rng.gen::<f64>() < p
    })?;
    Ok(WRandomSample { tournament, coords })
}

/// Visits every `k`-subset of `pool` in lexicographic order.
pub(crate) fn for_each_combination(pool: &[usize], k: usize, mut visit: impl FnMut(&[usize])) {
    let m = pool.len();
    if k > m {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut chosen: Vec<usize> = idx.iter().map(|&i| pool[i]).collect();
    loop {
        visit(&chosen);
        let mut pos = k;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            if idx[pos] != pos + m - k {
                break;
            }
            if pos == 0 {
                return;
            }
        }
        idx[pos] += 1;
        chosen[pos] = pool[idx[pos]];
        for p in pos + 1..k {
            idx[p] = idx[p - 1] + 1;
            chosen[p] = pool[idx[p]];
        }
    }
}

/// Counts directed Hamiltonian cycles of a small tournament given by local
/// out-masks, anchored at local vertex 0.
struct HamiltonianCounter {
    len: usize,
    table: Vec<u64>,
}

impl HamiltonianCounter {
    fn new(len: usize) -> Self {
        HamiltonianCounter {
            len,
            table: vec![0; (1usize << (len - 1)) * (len - 1)],
        }
    }

    /// `adj[a]` has bit `b` set iff local vertex `a` beats local vertex `b`.
    /// Paths start at vertex 0; the subset index ranges over vertices
    /// `1..len` mapped to bits `0..len-1`.
    fn count(&mut self, adj: &[u32]) -> u64 {
        let len = self.len;
        let width = len - 1;
        let full = (1usize << width) - 1;
        self.table.fill(0);
        let table = &mut self.table;
        for v in 0..width {
            if adj[0] >> (v + 1) & 1 == 1 {
                table[(1 << v) * width + v] = 1;
            }
        }
        for mask in 1..full {
            for v in 0..width {
                let paths = table[mask * width + v];
                if paths == 0 {
                    continue;
                }
                let mut next = (adj[v + 1] >> 1) as usize & !mask & full;
                while next != 0 {
                    let u = next.trailing_zeros() as usize;
                    next &= next - 1;
                    table[(mask | 1 << u) * width + u] += paths;
                }
            }
        }
        (0..width)
            .filter(|&v| adj[v + 1] & 1 == 1)
            .map(|v| table[full * width + v])
            .sum()
    }
}

fn check_length(len: usize) -> Result<()> {
    if len < 3 {
        return Err(Error::invalid(format!("cycle length must be at least 3, got {len}")));
    }
    if len > MAX_EXACT_LENGTH {
        return Err(Error::invalid(format!(
            "cycle length {len} exceeds the exact-count limit {MAX_EXACT_LENGTH}"
        )));
    }
    Ok(())
}

/// Cycles of length `len` whose least vertex is `first`.
fn count_anchored(t: &Tournament, len: usize, first: usize, counter: &mut HamiltonianCounter) -> u64 {
    let rest: Vec<usize> = (first + 1..t.order()).collect();
    let mut total = 0;
    let mut verts = vec![first; len];
    let mut adj = vec![0u32; len];
    for_each_combination(&rest, len - 1, |others| {
        verts[1..].copy_from_slice(others);
        for (a, &va) in verts.iter().enumerate() {
            let mut mask = 0u32;
            for (b, &vb) in verts.iter().enumerate() {
                if a != b && t.beats(va, vb) {
                    mask |= 1 << b;
                }
            }
            adj[a] = mask;
        }
        total += counter.count(&adj);
    });
    total
}

/// Exact number of directed cycles of length `len` in `t`.
///
/// Every `len`-subset is visited once and the directed Hamiltonian cycles of
/// the induced subtournament are counted by a dynamic program over
/// (visited subset, current vertex) anchored at the least vertex. Cost is
/// `O(C(n, len) * 2^len * len^2)`.
pub fn exact_cycle_count(t: &Tournament, len: usize) -> Result<u64> {
    check_length(len)?;
    if len > t.order() {
        return Ok(0);
    }
    let mut counter = HamiltonianCounter::new(len);
    Ok((0..=t.order() - len)
        .map(|first| count_anchored(t, len, first, &mut counter))
        .sum())
}

/// Same as [`exact_cycle_count`], with subsets partitioned by least vertex
/// across `workers` threads. Integer summation keeps the result exact and
/// independent of the worker count.
pub fn exact_cycle_count_parallel(t: &Tournament, len: usize, workers: usize) -> Result<u64> {
    use rayon::prelude::*;

    check_length(len)?;
    if workers == 0 {
        return Err(Error::invalid("worker count must be positive"));
    }
    if len > t.order() {
        return Ok(0);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::invalid(format!("cannot build worker pool: {e}")))?;
    Ok(pool.install(|| {
        (0..=t.order() - len)
            .into_par_iter()
            .map_init(
                || HamiltonianCounter::new(len),
                |counter, first| count_anchored(t, len, first, counter),
            )
            .sum()
    }))
}

/// Number of cyclic triangles from the out-degrees: `C(n,3) - sum C(d_i,2)`.
pub fn goodman_count3(t: &Tournament) -> u64 {
    let n = t.order() as u64;
    let all = n * n.saturating_sub(1) * n.saturating_sub(2) / 6;
    let transitive: u64 = t
        .degree_sequence()
        .out_degrees
        .iter()
        .map(|&d| (d as u64) * (d as u64).saturating_sub(1) / 2)
        .sum();
    all - transitive
}

/// Expected number of `len`-cycles in a uniformly random `n`-vertex
/// tournament: `(len-1)!/2^len * C(n, len)`.
pub fn expected_random_count(n: usize, len: usize) -> f64 {
    if len > n {
        return 0.0;
    }
    let mut binom = 1.0;
    for i in 0..len {
        binom = binom * (n - i) as f64 / (i + 1) as f64;
    }
    let fact: f64 = (1..len).map(|i| i as f64).product();
    fact / 2f64.powi(len as i32) * binom
}

/// Cycle count normalized by the random-tournament expectation.
pub fn normalized_density(t: &Tournament, len: usize) -> Result<f64> {
    check_length(len)?;
    if len > t.order() {
        return Err(Error::invalid(format!(
            "cycle length {len} exceeds the order {}",
            t.order()
        )));
    }
    let count = exact_cycle_count(t, len)?;
    Ok(count as f64 / expected_random_count(t.order(), len))
}

/// Counts induced 4-vertex subtournaments by type.
pub fn four_profile(t: &Tournament) -> Result<FourProfile> {
    let n = t.order();
    if n < 4 {
        return Err(Error::invalid(format!("4-vertex profile needs n >= 4, got {n}")));
    }
    let mut profile = FourProfile::default();
    let all: Vec<usize> = (0..n).collect();
    for_each_combination(&all, 4, |quad| {
        let mut degrees = [0usize; 4];
        for (a, &u) in quad.iter().enumerate() {
            degrees[a] = quad.iter().filter(|&&v| v != u && t.beats(u, v)).count();
        }
        match classify_four(degrees) {
            FourType::Transitive => profile.t4 += 1,
            FourType::Hamiltonian => profile.c4 += 1,
            FourType::CycleWithSink => profile.l4 += 1,
            FourType::CycleWithSource => profile.w4 += 1,
        }
    });
    Ok(profile)
}
