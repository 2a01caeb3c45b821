//! Exhaustive search for the maximum cyclic index at a fixed order.
//!
//! Every sign matrix is sign-equivalent to one whose first row is all `+1`,
//! so the default scope only enumerates the remaining `C(n-1, 2)` entries
//! (`2^21` matrices at order 8). The mask space is cut into fixed chunks
//! by its high bits; inside a chunk the low bits follow a Gray code so each
//! step flips a single entry. Chunk results merge associatively and are
//! combined in chunk order, so the report does not depend on the number of
//! workers.

use std::collections::{BTreeMap, HashSet};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{canonical_form, normalized_orbit, CyclicIndexer, SkewSignMatrix};
use crate::{Error, Result};

pub const CHECKPOINT_SCHEMA: &str = "tournament-cycles.search-checkpoint.v1";

/// Gray-code run length inside one chunk.
const CHUNK_LOW_BITS: u32 = 12;
/// Chunks processed between checkpoint writes.
const CHUNKS_PER_BATCH: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchScope {
    /// First row `+1`, first column `-1`; all other entries free.
    FirstRowFixed,
    /// Every entry above the diagonal free.
    All,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub order: usize,
    pub scope: SearchScope,
    pub workers: usize,
    /// Progress is saved here after every batch of chunks and resumed from
    /// if the file already exists.
    pub checkpoint: Option<PathBuf>,
}

impl SearchConfig {
    pub fn new(order: usize) -> Self {
        SearchConfig {
            order,
            scope: SearchScope::FirstRowFixed,
            workers: 1,
            checkpoint: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub order: usize,
    pub scope: SearchScope,
    pub max_cyclic_index: i64,
    /// Scanned matrices attaining the maximum.
    pub achiever_count: u64,
    /// Canonical representative of each sign-equivalence class among the
    /// achievers, ascending.
    pub achiever_classes: Vec<SkewSignMatrix>,
    /// Number of achievers in each class, aligned with `achiever_classes`.
    pub class_sizes: Vec<u64>,
    pub matrices_scanned: u64,
    /// How many scanned matrices have each cyclic index value.
    pub value_histogram: BTreeMap<i64, u64>,
    pub elapsed_seconds: f64,
}

impl SearchReport {
    /// JSON without the timing field, for comparing runs.
    pub fn deterministic_json(&self) -> String {
        let mut copy = self.clone();
        copy.elapsed_seconds = 0.0;
        serde_json::to_string_pretty(&copy).expect("report serializes")
    }
}

/// Partial result over a range of masks.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
struct Partial {
    max: Option<i64>,
    /// Packed bits (hex) of matrices attaining `max`.
    achievers: Vec<String>,
    histogram: BTreeMap<i64, u64>,
    scanned: u64,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        match (self.max, other.max) {
            (_, None) => {}
            (None, Some(_)) => {
                self.max = other.max;
                self.achievers = other.achievers;
            }
            (Some(a), Some(b)) if b > a => {
                self.max = Some(b);
                self.achievers = other.achievers;
            }
            (Some(a), Some(b)) if b == a => self.achievers.extend(other.achievers),
            _ => {}
        }
        for (k, v) in other.histogram {
            *self.histogram.entry(k).or_default() += v;
        }
        self.scanned += other.scanned;
        self
    }
}

/// On-disk progress of a search. Chunks complete in order, so progress is a
/// prefix `[0, next_chunk)` of the chunk sequence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub schema: String,
    pub order: usize,
    pub scope: SearchScope,
    pub total_chunks: u64,
    pub masks_per_chunk: u64,
    pub next_chunk: u64,
    /// Masks `[0, completed_masks)` are done.
    pub completed_masks: u64,
    partial: Partial,
}

impl Checkpoint {
    fn load(path: &Path, layout: &Layout) -> Result<Option<Checkpoint>> {
        if !path.exists() {
            return Ok(None);
        }
        let text = std::fs::read_to_string(path)?;
        let cp: Checkpoint = serde_json::from_str(&text)
            .map_err(|e| Error::Checkpoint(format!("{}: {e}", path.display())))?;
        if cp.schema != CHECKPOINT_SCHEMA {
            return Err(Error::Checkpoint(format!(
                "schema {:?} does not match {CHECKPOINT_SCHEMA:?}",
                cp.schema
            )));
        }
        if cp.order != layout.order
            || cp.scope != layout.scope
            || cp.total_chunks != layout.chunks
            || cp.masks_per_chunk != layout.chunk_len()
        {
            return Err(Error::Checkpoint("checkpoint was written for a different search".into()));
        }
        if cp.next_chunk > cp.total_chunks {
            return Err(Error::Checkpoint("checkpoint progress is out of range".into()));
        }
        Ok(Some(cp))
    }

    fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, serde_json::to_string_pretty(self)?)?;
        std::fs::rename(&tmp, path)?;
        Ok(())
    }
}

struct Layout {
    order: usize,
    scope: SearchScope,
    /// Upper-triangle pairs that vary, low mask bit first.
    free: Vec<(usize, usize)>,
    low_bits: u32,
    chunks: u64,
}

impl Layout {
    fn new(order: usize, scope: SearchScope) -> Result<Self> {
        if !(2..=8).contains(&order) {
            return Err(Error::invalid(format!("exhaustive search supports orders 2..=8, got {order}")));
        }
        let first = match scope {
            SearchScope::FirstRowFixed => 1,
            SearchScope::All => 0,
        };
        let free: Vec<(usize, usize)> = (first..order)
            .flat_map(|i| (i + 1..order).map(move |j| (i, j)))
            .collect();
        let low_bits = CHUNK_LOW_BITS.min(free.len() as u32);
        let chunks = 1u64 << (free.len() as u32 - low_bits);
        Ok(Layout {
            order,
            scope,
            free,
            low_bits,
            chunks,
        })
    }

    fn chunk_len(&self) -> u64 {
        1 << self.low_bits
    }

    fn matrix_for(&self, mask: u64) -> SkewSignMatrix {
        let mut m = SkewSignMatrix::from_fn(self.order, |i, _| i == 0).expect("order checked");
        for (bit, &(i, j)) in self.free.iter().enumerate() {
            m.set(i, j, if mask >> bit & 1 == 1 { 1 } else { -1 });
        }
        m
    }

    fn scan_chunk(&self, chunk: u64, indexer: &mut CyclicIndexer) -> Partial {
        let n = self.order;
        let high = chunk << self.low_bits;
        let mut mask = high;
        let mut signs = self.matrix_for(mask).sign_table();
        let mut partial = Partial::default();
        let mut max = i64::MIN;
        let mut achievers: Vec<u64> = Vec::new();
        for step in 0..self.chunk_len() {
            if step > 0 {
                let bit = step.trailing_zeros() as usize;
                mask ^= 1 << bit;
                let (i, j) = self.free[bit];
                signs[i * n + j] = -signs[i * n + j];
                signs[j * n + i] = -signs[j * n + i];
            }
            let value = indexer.compute(&signs);
            *partial.histogram.entry(value).or_default() += 1;
            if value > max {
                max = value;
                achievers.clear();
            }
            if value == max {
                achievers.push(mask);
            }
        }
        achievers.sort_unstable();
        partial.max = Some(max);
        partial.achievers = achievers
            .into_iter()
            .map(|m| format!("{:x}", self.matrix_for(m).bits()))
            .collect();
        partial.scanned = self.chunk_len();
        partial
    }
}

fn build_report(layout: &Layout, partial: Partial, started: Instant) -> Result<SearchReport> {
    let max = partial.max.ok_or_else(|| Error::invalid("search scanned no matrices"))?;
    let mut achievers = partial
        .achievers
        .iter()
        .map(|hex| {
            let bits = u128::from_str_radix(hex, 16)
                .map_err(|e| Error::Checkpoint(format!("bad achiever encoding {hex:?}: {e}")))?;
            SkewSignMatrix::from_bits(layout.order, bits)
        })
        .collect::<Result<Vec<_>>>()?;
    achievers.sort();

    // Bucket by orbit: each new class costs one orbit enumeration, each
    // further achiever one hash lookup.
    let mut classes: Vec<(SkewSignMatrix, HashSet<u128>, u64)> = Vec::new();
    for m in &achievers {
        let key = m.normalize_first_row().bits();
        match classes.iter_mut().find(|(_, orbit, _)| orbit.contains(&key)) {
            Some(class) => class.2 += 1,
            None => classes.push((canonical_form(m), normalized_orbit(m), 1)),
        }
    }
    classes.sort_by_key(|c| c.0);

    Ok(SearchReport {
        order: layout.order,
        scope: layout.scope,
        max_cyclic_index: max,
        achiever_count: achievers.len() as u64,
        achiever_classes: classes.iter().map(|c| c.0).collect(),
        class_sizes: classes.iter().map(|c| c.2).collect(),
        matrices_scanned: partial.scanned,
        value_histogram: partial.histogram,
        elapsed_seconds: started.elapsed().as_secs_f64(),
    })
}

/// Runs the search described by `config`.
pub fn run_search(config: &SearchConfig) -> Result<SearchReport> {
    if config.workers == 0 {
        return Err(Error::invalid("worker count must be positive"));
    }
    let started = Instant::now();
    let layout = Layout::new(config.order, config.scope)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::invalid(format!("cannot build worker pool: {e}")))?;

    let mut progress = match &config.checkpoint {
        Some(path) => Checkpoint::load(path, &layout)?,
        None => None,
    }
    .unwrap_or_else(|| Checkpoint {
        schema: CHECKPOINT_SCHEMA.into(),
        order: layout.order,
        scope: layout.scope,
        total_chunks: layout.chunks,
        masks_per_chunk: layout.chunk_len(),
        next_chunk: 0,
        completed_masks: 0,
        partial: Partial::default(),
    });

    while progress.next_chunk < layout.chunks {
        let start = progress.next_chunk;
        let end = (start + (CHUNKS_PER_BATCH * config.workers) as u64).min(layout.chunks);
        let results: Vec<Partial> = pool.install(|| {
            (start..end)
                .into_par_iter()
                .map_init(
                    || CyclicIndexer::new(layout.order),
                    |indexer, chunk| layout.scan_chunk(chunk, indexer),
                )
                .collect()
        });
        let batch = results.into_iter().fold(Partial::default(), Partial::merge);
        progress.partial = std::mem::take(&mut progress.partial).merge(batch);
        progress.next_chunk = end;
        progress.completed_masks = end * layout.chunk_len();
        if let Some(path) = &config.checkpoint {
            progress.save(path)?;
        }
    }
    build_report(&layout, progress.partial, started)
}

/// Scans every order-`n` sign matrix with first row `+1` (orders 2 to 8).
pub fn search_max_cyclic_index(order: usize, workers: usize) -> Result<SearchReport> {
    run_search(&SearchConfig {
        workers,
        ..SearchConfig::new(order)
    })
}
