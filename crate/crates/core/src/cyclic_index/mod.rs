//! Cyclic index of ±1 skew-symmetric matrices and sign-equivalence.
//!
//! The cyclic index of an order-`n` matrix is the sum over all permutations
//! of the product of entries along the closed tour the permutation traces.
//! Two skew sign matrices are sign-equivalent when one is obtained from the
//! other by a simultaneous row/column permutation and by negating a set of
//! rows together with the same set of columns. The cyclic index is constant
//! on equivalence classes since every sign appears twice on a closed tour.

mod fixtures;
mod search;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use fixtures::{d4, d8, d8_double_prime, d8_prime, two_c4_tournament, fixtures, trace4_alternative, Fixtures};
pub use search::{
    run_search, search_max_cyclic_index, Checkpoint, SearchConfig, SearchReport, SearchScope,
    CHECKPOINT_SCHEMA,
};

use crate::spectral::{Matrix, SkewMatrix};
use crate::tournament::Tournament;
use crate::{Error, Result};

/// Largest order a packed sign matrix can hold.
pub const MAX_ORDER: usize = 12;

/// Largest order accepted by the permutation-sum definition.
pub const MAX_DEFINITION_ORDER: usize = 8;

/// Skew-symmetric matrix with zero diagonal and ±1 off the diagonal.
///
/// The upper triangle is packed column by column, pairs
/// `(0,1), (0,2), (1,2), (0,3), ...`, with the first pair in the most
/// significant bit; `+1` is a set bit. Comparing the packed integers is
/// therefore lexicographic comparison of that entry sequence with `-1 < +1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewSignMatrix {
    n: u8,
    bits: u128,
}

#[inline]
fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

#[inline]
fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl SkewSignMatrix {
    /// All upper entries `-1`.
    pub fn all_minus(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::invalid(format!("sign matrix order must be in 1..={MAX_ORDER}, got {n}")));
        }
        Ok(SkewSignMatrix { n: n as u8, bits: 0 })
    }

    /// Sets the entry `(i, j)`, `i < j`, to `+1` iff `plus(i, j)`.
    pub fn from_fn(n: usize, mut plus: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut m = SkewSignMatrix::all_minus(n)?;
        for j in 1..n {
            for i in 0..j {
                m.set(i, j, if plus(i, j) { 1 } else { -1 });
            }
        }
        Ok(m)
    }

    /// Builds from a full matrix of signs, checking skew-symmetry.
    pub fn from_signs(rows: &[Vec<i8>]) -> Result<Self> {
        let n = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::Invariant(format!("row {i} has {} entries, expected {n}", r.len())));
            }
            if r[i] != 0 {
                return Err(Error::Invariant(format!("diagonal entry {i} is not zero")));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (rows[i][j], rows[j][i]);
                if a.abs() != 1 || a != -b {
                    return Err(Error::Invariant(format!("entries ({i},{j}) and ({j},{i}) must be opposite signs")));
                }
            }
        }
        SkewSignMatrix::from_fn(n, |i, j| rows[i][j] == 1)
    }

    /// Rebuilds a matrix of order `n` from its packed bits.
    pub fn from_bits(n: usize, bits: u128) -> Result<Self> {
        let m = SkewSignMatrix::all_minus(n)?;
        let width = pair_count(n);
        if width < 128 && bits >> width != 0 {
            return Err(Error::invalid(format!("bits exceed the {width} pairs of order {n}")));
        }
        Ok(SkewSignMatrix { bits, ..m })
    }

    /// The skew sign matrix of a tournament: `+1` at `(i, j)` iff `i -> j`.
    pub fn from_tournament(t: &Tournament) -> Result<Self> {
        SkewSignMatrix::from_fn(t.order(), |i, j| t.beats(i, j))
    }

    pub fn to_tournament(&self) -> Tournament {
        Tournament::from_orientation(self.order(), |i, j| self.get(i, j) == 1).expect("order >= 1")
    }

    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    #[inline]
    fn bit_of(&self, i: usize, j: usize) -> u32 {
        (pair_count(self.order()) - 1 - pair_index(i, j)) as u32
    }

    /// Entry `(i, j)`: `0`, `+1` or `-1`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i8 {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Less => {
                if self.bits >> self.bit_of(i, j) & 1 == 1 {
                    1
                } else {
                    -1
                }
            }
            std::cmp::Ordering::Greater => -self.get(j, i),
        }
    }

    /// Sets `(i, j)` to `sign` and `(j, i)` to `-sign`.
    pub fn set(&mut self, i: usize, j: usize, sign: i8) {
        assert!(i != j && sign.abs() == 1, "off-diagonal ±1 entries only");
        let (lo, hi, upper) = if i < j { (i, j, sign) } else { (j, i, -sign) };
        let bit = 1u128 << self.bit_of(lo, hi);
        if upper == 1 {
            self.bits |= bit;
        } else {
            self.bits &= !bit;
        }
    }

    /// Full sign table, row-major, as `i64` for the cyclic-index DP.
    pub fn sign_table(&self) -> Vec<i64> {
        let n = self.order();
        let mut out = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                out[i * n + j] = self.get(i, j) as i64;
            }
        }
        out
    }

    pub fn to_skew_matrix(&self) -> SkewMatrix {
        let n = self.order();
        SkewMatrix::new(Matrix::from_fn(n, |i, j| self.get(i, j) as f64)).expect("sign matrices are skew")
    }

    /// `B'_ij = s_i s_j B_{perm(i) perm(j)}`.
    pub fn transform(&self, perm: &[usize], signs: &[i8]) -> Result<Self> {
        let n = self.order();
        if perm.len() != n || signs.len() != n {
            return Err(Error::invalid("permutation and sign vector must match the order"));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::invalid("not a permutation"));
            }
        }
        if signs.iter().any(|s| s.abs() != 1) {
            return Err(Error::invalid("signs must be ±1"));
        }
        SkewSignMatrix::from_fn(n, |i, j| signs[i] * signs[j] * self.get(perm[i], perm[j]) == 1)
    }

    /// The sign-equivalent matrix with first row all `+1`, keeping the
    /// vertex order.
    pub fn normalize_first_row(&self) -> Self {
        let n = self.order();
        let signs: Vec<i8> = (0..n).map(|i| if i == 0 { 1 } else { self.get(0, i) }).collect();
        let perm: Vec<usize> = (0..n).collect();
        self.transform(&perm, &signs).expect("valid transform")
    }

    /// Rows as strings over `0`, `+`, `-`.
    pub fn row_strings(&self) -> Vec<String> {
        let n = self.order();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match self.get(i, j) {
                        0 => '0',
                        1 => '+',
                        _ => '-',
                    })
                    .collect()
            })
            .collect()
    }

    pub fn from_row_strings<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let signs = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                r.as_ref()
                    .chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| match c {
                        '0' => Ok(0),
                        '+' => Ok(1),
                        '-' => Ok(-1),
                        other => Err(Error::parse(i + 1, format!("unexpected sign character {other:?}"))),
                    })
                    .collect::<Result<Vec<i8>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SkewSignMatrix::from_signs(&signs)
    }
}

impl fmt::Debug for SkewSignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewSignMatrix[{}]", self.row_strings().join(" "))
    }
}

impl fmt::Display for SkewSignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.row_strings() {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

impl FromStr for SkewSignMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows: Vec<&str> = s.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        SkewSignMatrix::from_row_strings(&rows)
    }
}

#[derive(Serialize, Deserialize)]
struct SignMatrixRepr {
    order: usize,
    rows: Vec<String>,
}

impl Serialize for SkewSignMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SignMatrixRepr {
            order: self.order(),
            rows: self.row_strings(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SkewSignMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = SignMatrixRepr::deserialize(d)?;
        let m = SkewSignMatrix::from_row_strings(&repr.rows).map_err(serde::de::Error::custom)?;
        if m.order() != repr.order {
            return Err(serde::de::Error::custom("order does not match the rows"));
        }
        Ok(m)
    }
}

/// Calls `visit` on every permutation of `0..n` (Heap's algorithm).
pub(crate) fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    visit(&perm);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            visit(&perm);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Cyclic index by the literal sum over all `n!` permutations.
pub fn cyclic_index_def(b: &SkewSignMatrix) -> Result<i64> {
    let n = b.order();
    if n > MAX_DEFINITION_ORDER {
        return Err(Error::invalid(format!(
            "permutation-sum cyclic index is limited to order {MAX_DEFINITION_ORDER}, got {n}"
        )));
    }
    let signs = b.sign_table();
    let mut total = 0i64;
    for_each_permutation(n, |perm| {
        let mut prod = 1i64;
        for k in 0..n {
            prod *= signs[perm[k] * n + perm[(k + 1) % n]];
        }
        total += prod;
    });
    Ok(total)
}

/// Reusable workspace for the cyclic-index dynamic program.
///
/// Paths start at vertex 0; the table holds, for each subset of the other
/// vertices and each last vertex, the signed sum of path products. Closing
/// every full path back to 0 sums over cyclic orders with 0 first; each
/// closed tour corresponds to `n` permutations (its rotations).
pub struct CyclicIndexer {
    n: usize,
    table: Vec<i64>,
}

impl CyclicIndexer {
    pub fn new(n: usize) -> Self {
        let width = n.saturating_sub(1);
        CyclicIndexer {
            n,
            table: vec![0; (1usize << width) * width.max(1)],
        }
    }

    /// `signs` is the row-major `n x n` table.
    pub fn compute(&mut self, signs: &[i64]) -> i64 {
        let n = self.n;
        if n < 2 {
            return 0;
        }
        let width = n - 1;
        let full = (1usize << width) - 1;
        let table = &mut self.table;
        table.fill(0);
        for v in 0..width {
            table[(1 << v) * width + v] = signs[v + 1];
        }
        for mask in 1..full {
            let free = !mask & full;
            let base = mask * width;
            for v in 0..width {
                let paths = table[base + v];
                if paths == 0 || mask >> v & 1 == 0 {
                    continue;
                }
                let row = &signs[(v + 1) * n + 1..(v + 2) * n];
                let mut next = free;
                while next != 0 {
                    let u = next.trailing_zeros() as usize;
                    next &= next - 1;
                    table[(mask | 1 << u) * width + u] += paths * row[u];
                }
            }
        }
        let closing: i64 = (0..width)
            .map(|v| table[full * width + v] * signs[(v + 1) * n])
            .sum();
        closing * n as i64
    }
}

/// Cyclic index by subset dynamic programming, `O(2^n n^2)`.
pub fn cyclic_index_fast(b: &SkewSignMatrix) -> i64 {
    CyclicIndexer::new(b.order()).compute(&b.sign_table())
}

struct EquivalenceSearch<'a> {
    from: &'a SkewSignMatrix,
    to: &'a SkewSignMatrix,
    perm: Vec<usize>,
    signs: Vec<i8>,
    used: Vec<bool>,
}

impl EquivalenceSearch<'_> {
    fn extend(&mut self, pos: usize) -> bool {
        let n = self.from.order();
        if pos == n {
            return true;
        }
        for v in 0..n {
            if self.used[v] {
                continue;
            }
            let sign = if pos == 0 {
                1
            } else {
                // fixes s_pos from the (0, pos) entry
                self.to.get(0, pos) * self.from.get(self.perm[0], v)
            };
            let consistent = (1..pos).all(|j| {
                self.signs[j] * sign * self.from.get(self.perm[j], v) == self.to.get(j, pos)
            });
            if !consistent {
                continue;
            }
            self.perm[pos] = v;
            self.signs[pos] = sign;
            self.used[v] = true;
            if self.extend(pos + 1) {
                return true;
            }
            self.used[v] = false;
        }
        false
    }
}

/// Finds `(perm, signs)` with `to = from.transform(perm, signs)`, if any.
pub fn find_equivalence(from: &SkewSignMatrix, to: &SkewSignMatrix) -> Result<Option<(Vec<usize>, Vec<i8>)>> {
    if from.order() != to.order() {
        return Err(Error::invalid(format!(
            "order mismatch: {} vs {}",
            from.order(),
            to.order()
        )));
    }
    let n = from.order();
    let mut search = EquivalenceSearch {
        from,
        to,
        perm: vec![0; n],
        signs: vec![1; n],
        used: vec![false; n],
    };
    Ok(search.extend(0).then_some((search.perm, search.signs)))
}

/// Exhaustive sign-equivalence test with pruning on partial assignments.
/// The global sign is fixed (`s_0 = +1`), since negating every row and
/// column leaves the matrix unchanged.
pub fn sign_equivalent(a: &SkewSignMatrix, b: &SkewSignMatrix) -> Result<bool> {
    Ok(find_equivalence(a, b)?.is_some())
}

struct CanonicalSearch<'a> {
    b: &'a SkewSignMatrix,
    width: usize,
    perm: Vec<usize>,
    signs: Vec<i8>,
    used: Vec<bool>,
    best: Option<u128>,
}

impl CanonicalSearch<'_> {
    fn extend(&mut self, pos: usize, prefix: u128) {
        let n = self.b.order();
        if pos == n {
            if self.best.is_none_or(|b| prefix < b) {
                self.best = Some(prefix);
            }
            return;
        }
        let len = pos * (pos + 1) / 2;
        for v in 0..n {
            if self.used[v] {
                continue;
            }
            // the (0, pos) entry is driven to -1, which fixes s_pos
            let sign = if pos == 0 { 1 } else { -self.b.get(self.perm[0], v) };
            let mut column = prefix;
            for j in 0..pos {
                let plus = self.signs[j] * sign * self.b.get(self.perm[j], v) == 1;
                column = column << 1 | plus as u128;
            }
            if let Some(best) = self.best {
                let best_prefix = if len == 0 { 0 } else { best >> (self.width - len) };
                if column > best_prefix {
                    continue;
                }
            }
            self.perm[pos] = v;
            self.signs[pos] = sign;
            self.used[v] = true;
            self.extend(pos + 1, column);
            self.used[v] = false;
        }
    }
}

/// Lexicographically smallest packed encoding in the sign-equivalence
/// class of `b`.
///
/// For a fixed permutation the smallest encoding puts `-1` in every entry of
/// the first row, which determines the signs; the search then runs over
/// permutations position by position and prunes any branch whose packed
/// prefix already exceeds the best complete encoding.
pub fn canonical_form(b: &SkewSignMatrix) -> SkewSignMatrix {
    let n = b.order();
    let mut search = CanonicalSearch {
        b,
        width: pair_count(n),
        perm: vec![0; n],
        signs: vec![1; n],
        used: vec![false; n],
        best: None,
    };
    search.extend(0, 0);
    SkewSignMatrix {
        n: b.n,
        bits: search.best.expect("at least one permutation"),
    }
}

/// Every matrix with first row `+1` that is sign-equivalent to `b`, as
/// packed bits. There is exactly one such matrix per permutation.
pub fn normalized_orbit(b: &SkewSignMatrix) -> HashSet<u128> {
    let n = b.order();
    let mut out = HashSet::new();
    for_each_permutation(n, |perm| {
        let signs: Vec<i8> = (0..n).map(|i| if i == 0 { 1 } else { b.get(perm[0], perm[i]) }).collect();
        out.insert(b.transform(perm, &signs).expect("valid transform").bits());
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_sign_matrix(n: usize, rng: &mut impl Rng) -> SkewSignMatrix {
        SkewSignMatrix::from_fn(n, |_, _| rng.gen_bool(0.5)).unwrap()
    }

    fn random_transform(n: usize, rng: &mut impl Rng) -> (Vec<usize>, Vec<i8>) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        let signs = (0..n).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
        (perm, signs)
    }

    #[test]
    fn packing_layout() {
        let mut m = SkewSignMatrix::all_minus(4).unwrap();
        m.set(0, 1, 1);
        assert_eq!(m.bits(), 1 << 5);
        m.set(3, 2, 1);
        assert_eq!(m.get(2, 3), -1);
        assert_eq!(m.get(3, 2), 1);
        m.set(2, 3, 1);
        assert_eq!(m.bits(), 1 << 5 | 1);
        assert!(SkewSignMatrix::all_minus(13).is_err());
        assert!(SkewSignMatrix::from_bits(3, 1 << 3).is_err());
        let twelve = SkewSignMatrix::from_fn(12, |_, _| true).unwrap();
        assert_eq!(twelve.bits().count_ones(), 66);
    }

    #[test]
    fn parse_and_display() {
        let m = d4();
        let text = m.to_string();
        assert_eq!(text.lines().next(), Some("0+++"));
        assert_eq!(text.parse::<SkewSignMatrix>().unwrap(), m);
        assert!("0+\n+0".parse::<SkewSignMatrix>().is_err());
        assert!("0+\n-+".parse::<SkewSignMatrix>().is_err());
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(serde_json::from_str::<SkewSignMatrix>(&json).unwrap(), m);
    }

    #[test]
    fn definition_values() {
        assert_eq!(cyclic_index_def(&d4()).unwrap(), 8);
        assert_eq!(cyclic_index_def(&trace4_alternative()).unwrap(), -24);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            assert_eq!(cyclic_index_def(&random_sign_matrix(3, &mut rng)).unwrap(), 0);
        }
        assert!(cyclic_index_def(&SkewSignMatrix::all_minus(9).unwrap()).is_err());
        assert_eq!(cyclic_index_def(&SkewSignMatrix::all_minus(2).unwrap()).unwrap(), -2);
    }

    #[test]
    fn fast_agrees_with_definition() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for n in 1..=7 {
            for _ in 0..15 {
                let m = random_sign_matrix(n, &mut rng);
                assert_eq!(cyclic_index_fast(&m), cyclic_index_def(&m).unwrap(), "{m:?}");
            }
        }
        assert_eq!(cyclic_index_fast(&d8()), 2176);
        assert_eq!(cyclic_index_fast(&d8_prime()), 2176);
        assert_eq!(cyclic_index_fast(&d8_double_prime()), 2176);
    }

    #[test]
    fn heap_visits_every_permutation_once() {
        let mut seen = HashSet::new();
        for_each_permutation(5, |p| {
            assert!(seen.insert(p.to_vec()));
        });
        assert_eq!(seen.len(), 120);
    }

    #[test]
    fn equivalence_of_fixtures() {
        assert!(sign_equivalent(&d8(), &d8()).unwrap());
        assert!(sign_equivalent(&d8_prime(), &d8_double_prime()).unwrap());
        assert!(!sign_equivalent(&d8(), &d8_prime()).unwrap());
        assert!(sign_equivalent(&d4(), &d8()).is_err());
        let (perm, signs) = find_equivalence(&d8_prime(), &d8_double_prime()).unwrap().unwrap();
        assert_eq!(d8_prime().transform(&perm, &signs).unwrap(), d8_double_prime());
    }

    #[test]
    fn canonical_forms() {
        let c = canonical_form(&d4());
        assert_eq!(canonical_form(&c), c);
        assert_eq!(canonical_form(&d8_prime()), canonical_form(&d8_double_prime()));
        assert_ne!(canonical_form(&d8()), canonical_form(&d8_prime()));
        // every first-row entry of a canonical form is -1
        assert!((1..8).all(|j| canonical_form(&d8()).get(0, j) == -1));

        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for n in [5, 6, 7] {
            for _ in 0..10 {
                let m = random_sign_matrix(n, &mut rng);
                let (perm, signs) = random_transform(n, &mut rng);
                let moved = m.transform(&perm, &signs).unwrap();
                assert_eq!(canonical_form(&m), canonical_form(&moved));
                assert!(sign_equivalent(&m, &moved).unwrap());
                assert_eq!(cyclic_index_fast(&m), cyclic_index_fast(&moved));
            }
        }
    }

    #[test]
    fn canonical_form_matches_equivalence_on_order_five() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let sample: Vec<SkewSignMatrix> = (0..25).map(|_| random_sign_matrix(5, &mut rng)).collect();
        for a in &sample {
            for b in &sample {
                assert_eq!(
                    canonical_form(a) == canonical_form(b),
                    sign_equivalent(a, b).unwrap()
                );
            }
        }
    }

    #[test]
    fn canonical_form_is_minimal_over_the_orbit() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..5 {
            let m = random_sign_matrix(5, &mut rng);
            let mut min = u128::MAX;
            for_each_permutation(5, |perm| {
                for mask in 0..32u32 {
                    let signs: Vec<i8> = (0..5).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                    min = min.min(m.transform(perm, &signs).unwrap().bits());
                }
            });
            assert_eq!(canonical_form(&m).bits(), min);
        }
    }

    #[test]
    fn orbit_contains_normalized_members() {
        let orbit = normalized_orbit(&d4());
        assert!(orbit.contains(&d4().bits()));
        for &bits in &orbit {
            let m = SkewSignMatrix::from_bits(4, bits).unwrap();
            assert!((1..4).all(|j| m.get(0, j) == 1));
            assert_eq!(cyclic_index_fast(&m), 8);
        }
        let moved = d8_prime().transform(&[3, 1, 4, 0, 7, 6, 2, 5], &[1, -1, 1, 1, -1, -1, 1, -1]).unwrap();
        assert!(normalized_orbit(&d8_prime()).contains(&moved.normalize_first_row().bits()));
    }

    #[test]
    fn tournament_round_trip() {
        let t = two_c4_tournament();
        assert_eq!(SkewSignMatrix::from_tournament(&t).unwrap(), d8_double_prime());
        assert_eq!(d8_double_prime().to_tournament(), t);
        let b = d8_prime().to_skew_matrix();
        assert_eq!(b.matrix()[(1, 3)], -1.0);
    }
}
