//! Baseline symbol models: a static distribution and the adaptive
//! Krichevsky-Trofimov context model.

use super::SymbolModel;
use std::collections::HashMap;

/// A fixed distribution applied independently at every position.
#[derive(Debug, Clone)]
pub struct StaticModel {
    probs: Vec<f64>,
}

impl StaticModel {
    /// Normalizes `weights` into a distribution. Panics on an empty or
    /// non-positive weight vector; coding-time validation handles the rest.
    pub fn new(weights: &[f64]) -> Self {
        assert!(!weights.is_empty(), "empty alphabet");
        let sum: f64 = weights.iter().sum();
        assert!(sum > 0.0, "weights must have positive sum");
        StaticModel {
            probs: weights.iter().map(|&w| w / sum).collect(),
        }
    }

    pub fn uniform(alphabet: usize) -> Self {
        StaticModel::new(&vec![1.0; alphabet])
    }
}

impl SymbolModel for StaticModel {
    fn alphabet_size(&self) -> usize {
        self.probs.len()
    }

    fn next_distribution(&self) -> Vec<f64> {
        self.probs.clone()
    }

    fn update(&mut self, _symbol: usize) {}
}

/// Adaptive model with a Krichevsky-Trofimov estimator per context, where the
/// context is the last `order` symbols (shorter near the stream start, so
/// early positions get their own contexts deterministically):
///
///   p(s | ctx) = (count(ctx, s) + 1/2) / (total(ctx) + alphabet/2)
#[derive(Debug, Clone)]
pub struct KtModel {
    alphabet: usize,
    order: usize,
    history: Vec<usize>,
    counts: HashMap<Vec<usize>, Vec<u64>>,
}

impl KtModel {
    pub fn new(alphabet: usize, order: usize) -> Self {
        assert!(alphabet >= 1);
        KtModel {
            alphabet,
            order,
            history: Vec::new(),
            counts: HashMap::new(),
        }
    }

    fn context(&self) -> Vec<usize> {
        let start = self.history.len().saturating_sub(self.order);
        self.history[start..].to_vec()
    }
}

impl SymbolModel for KtModel {
    fn alphabet_size(&self) -> usize {
        self.alphabet
    }

    fn next_distribution(&self) -> Vec<f64> {
        let half_alpha = self.alphabet as f64 / 2.0;
        match self.counts.get(&self.context()) {
            Some(counts) => {
                let total: u64 = counts.iter().sum();
                let denom = total as f64 + half_alpha;
                let mut dist: Vec<f64> = counts
                    .iter()
                    .map(|&c| (c as f64 + 0.5) / denom)
                    .collect();
                let sum: f64 = dist.iter().sum();
                for p in &mut dist {
                    *p /= sum;
                }
                dist
            }
            None => vec![1.0 / self.alphabet as f64; self.alphabet],
        }
    }

    fn update(&mut self, symbol: usize) {
        debug_assert!(symbol < self.alphabet);
        let ctx = self.context();
        let counts = self
            .counts
            .entry(ctx)
            .or_insert_with(|| vec![0; self.alphabet]);
        counts[symbol] += 1;
        self.history.push(symbol);
        if self.history.len() > self.order {
            let drop = self.history.len() - self.order;
            self.history.drain(..drop);
        }
    }
}
