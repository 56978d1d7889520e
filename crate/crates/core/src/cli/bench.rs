//! Timing harness that compares computation strategies and refuses to report
//! timings unless every strategy produced identical values.

use std::fmt;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::error::Result;
use crate::exact::ExactRat;

type Compute = Box<dyn Fn(usize) -> Result<Vec<ExactRat>> + Send + Sync>;

/// A named strategy computing terms `0..=n_max`.
pub struct BenchMethod {
    pub name: String,
    compute: Compute,
}

impl BenchMethod {
    pub fn new(name: impl Into<String>, compute: impl Fn(usize) -> Result<Vec<ExactRat>> + Send + Sync + 'static) -> Self {
        Self { name: name.into(), compute: Box::new(compute) }
    }
}

impl fmt::Debug for BenchMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BenchMethod").field("name", &self.name).finish_non_exhaustive()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub method: String,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchOutcome {
    pub n_max: usize,
    pub rows: Vec<BenchRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BenchError {
    #[error("no methods selected")]
    NoMethods,
    #[error("method {method} failed: {source}")]
    Method { method: String, source: crate::Error },
    #[error("method {method} returned {found} terms, expected {expected}")]
    Length { method: String, expected: usize, found: usize },
    #[error("methods {reference} and {method} disagree at n = {index}: {expected} vs {found}")]
    Disagreement { reference: String, method: String, index: usize, expected: Box<ExactRat>, found: Box<ExactRat> },
}

/// Runs every method over `0..=n_max`, then checks that all value lists are
/// identical to the first method's. Timings are only returned when they are.
pub fn run_bench(n_max: usize, methods: &[BenchMethod]) -> Result<BenchOutcome, BenchError> {
    let (reference, rest) = methods.split_first().ok_or(BenchError::NoMethods)?;
    let mut rows = Vec::with_capacity(methods.len());
    let mut results = Vec::with_capacity(methods.len());
    for method in methods {
        let started = Instant::now();
        let values = (method.compute)(n_max)
            .map_err(|source| BenchError::Method { method: method.name.clone(), source })?;
        rows.push(BenchRow { method: method.name.clone(), elapsed: started.elapsed() });
        if values.len() != n_max + 1 {
            return Err(BenchError::Length { method: method.name.clone(), expected: n_max + 1, found: values.len() });
        }
        results.push(values);
    }
    let (expected, others) = results.split_first().expect("at least one method");
    for (method, values) in rest.iter().zip(others) {
        if let Some(index) = (0..=n_max).find(|&i| values[i] != expected[i]) {
            return Err(BenchError::Disagreement {
                reference: reference.name.clone(),
                method: method.name.clone(),
                index,
                expected: Box::new(expected[index].clone()),
                found: Box::new(values[index].clone()),
            });
        }
    }
    Ok(BenchOutcome { n_max, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn constant(name: &str, v: i64) -> BenchMethod {
        BenchMethod::new(name, move |n| Ok(vec![rat(v, 1); n + 1]))
    }

    #[test]
    fn agreement_yields_timings() {
        let out = run_bench(5, &[constant("a", 1), constant("b", 1)]).unwrap();
        assert_eq!(out.rows.len(), 2);
        assert_eq!(out.rows[1].method, "b");
    }

    #[test]
    fn disagreement_is_an_error() {
        let err = run_bench(5, &[constant("a", 1), constant("b", 2)]).unwrap_err();
        assert!(matches!(err, BenchError::Disagreement { index: 0, .. }));
        assert_eq!(run_bench(5, &[]).unwrap_err(), BenchError::NoMethods);
        let short = BenchMethod::new("short", |n| Ok(vec![rat(1, 1); n]));
        assert!(matches!(run_bench(3, &[constant("a", 1), short]).unwrap_err(), BenchError::Length { .. }));
    }
}
