#![allow(dead_code)]

use fullcycle::partitions::Partitions;
use fullcycle::{FactorizationProblem, Partition};
use rand::rngs::StdRng;
use rand::Rng;

pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn problem(alphas: &[Partition]) -> FactorizationProblem {
    FactorizationProblem::new(alphas.to_vec()).unwrap()
}

/// Nondecreasing index tuples of length `m` over `items`.
pub fn multisets<T: Clone>(items: &[T], m: usize) -> Vec<Vec<T>> {
    fn go<T: Clone>(items: &[T], m: usize, from: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in from..items.len() {
            cur.push(items[i].clone());
            go(items, m, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, m, 0, &mut Vec::new(), &mut out);
    out
}

/// All ordered tuples of length `m`.
pub fn tuples<T: Clone>(items: &[T], m: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|t| {
                items.iter().map(move |x| {
                    let mut t = t.clone();
                    t.push(x.clone());
                    t
                })
            })
            .collect();
    }
    out
}

/// Uniformly random partition of `n` with exactly `len` parts.
pub fn random_partition_with_len(rng: &mut StdRng, n: usize, len: usize) -> Partition {
    let all: Vec<Partition> = Partitions::of(n).exact_len(len).collect();
    all[rng.random_range(0..all.len())].clone()
}

/// Random problem of size `n` with `m` factors whose genus is a nonnegative integer.
pub fn random_valid_problem(rng: &mut StdRng, n: usize, m: usize) -> FactorizationProblem {
    let all: Vec<Partition> = Partitions::of(n).collect();
    loop {
        let alphas: Vec<Partition> = (0..m).map(|_| all[rng.random_range(0..all.len())].clone()).collect();
        let pr = problem(&alphas);
        if fullcycle::genus_of(&pr).genus.is_some() {
            return pr;
        }
    }
}
