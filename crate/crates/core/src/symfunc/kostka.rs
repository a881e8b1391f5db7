use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Kostka numbers `K_{λμ}` for all partitions of one degree.
#[derive(Debug)]
pub struct KostkaTable {
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    // row λ, column μ
    entries: Vec<Vec<u64>>,
}

const CACHED_DEGREES: usize = 24;

impl KostkaTable {
    /// Shared table for degree `n`; built once per process.
    pub fn for_degree(n: usize) -> &'static KostkaTable {
        static TABLES: [OnceLock<&'static KostkaTable>; CACHED_DEGREES] = [const { OnceLock::new() }; CACHED_DEGREES];
        assert!(n < CACHED_DEGREES, "Kostka table requested for degree {n}");
        TABLES[n].get_or_init(|| Box::leak(Box::new(Self::build(n))))
    }

    fn build(n: usize) -> Self {
        let partitions = Partition::all(n);
        let index: HashMap<Partition, usize> = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut memo = HashMap::new();
        let entries = partitions
            .iter()
            .map(|lam| partitions.iter().map(|mu| count_ssyt(lam, mu.parts(), &mut memo)).collect())
            .collect();
        Self { partitions, index, entries }
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn position(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn entry(&self, lam: usize, mu: usize) -> u64 {
        self.entries[lam][mu]
    }
}

/// Number of SSYT of shape `lam` and content `mu` (any composition).
fn count_ssyt(lam: &Partition, mu: &[usize], memo: &mut HashMap<(Partition, Vec<usize>), u64>) -> u64 {
    if mu.is_empty() {
        return u64::from(lam.is_empty());
    }
    let key = (lam.clone(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let (last, rest) = mu.split_last().unwrap();
    let total = lam.remove_horizontal_strips(*last).iter().map(|nu| count_ssyt(nu, rest, memo)).sum();
    memo.insert(key, total);
    total
}

/// `K_{λμ}`: semistandard tableaux of shape `lam` with content `mu`.
pub fn kostka(lam: &Partition, mu: &Partition) -> Result<u64> {
    if lam.size() != mu.size() {
        return Err(Error::SizeMismatch { left: lam.size(), right: mu.size() });
    }
    let t = KostkaTable::for_degree(lam.size());
    Ok(t.entry(t.position(lam).unwrap(), t.position(mu).unwrap()))
}
