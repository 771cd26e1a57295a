//! Acceptance suite (custom harness). Runs every criterion in sequence, so the
//! timing checks have the core to themselves, and prints one PASS/FAIL line
//! per criterion.
//! All comparisons are exact.
//!
//!     cargo test -p fullcycle --test acceptance

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{multisets, p, problem, random_partition_with_len, random_valid_problem, tuples};
use fullcycle::arith::factorial;
use fullcycle::characters::{count_fullcycle_characters, hook_char, mn_character};
use fullcycle::engines::{count_genus0, count_ps, count_theorem1, p_value, rho_closed, rho_table, s_value};
use fullcycle::oracle::{count_bruteforce, DEFAULT_BUDGET};
use fullcycle::partitions::Partitions;
use fullcycle::polynomial::{coefficient_of, d_eval, MultiPoly};
use fullcycle::{genus_of, Error, Partition};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn oracle(alphas: &[Partition]) -> BigInt {
    let n = alphas[0].size();
    count_bruteforce(&Partition::full_cycle(n).unwrap(), alphas, DEFAULT_BUDGET).unwrap()
}

fn show(alphas: &[Partition]) -> String {
    alphas.iter().map(|a| format!("({a})")).collect::<Vec<_>>().join(" ")
}

fn engines_agree_small() -> Outcome {
    let mut cases = 0;
    for n in 1..=6 {
        let parts: Vec<Partition> = Partitions::of(n).collect();
        for m in 1..=3 {
            for alphas in multisets(&parts, m) {
                let pr = problem(&alphas);
                let truth = oracle(&alphas);
                let t1 = count_theorem1(&pr).unwrap();
                let ps = count_ps(&pr).unwrap();
                let ch = count_fullcycle_characters(&alphas).unwrap();
                ensure(t1 == truth && ps == truth && ch == truth, || {
                    format!("{}: oracle {truth}, theorem1 {t1}, ps {ps}, characters {ch}", show(&alphas))
                })?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} multisets, n ≤ 6, m ≤ 3"))
}

fn worked_examples() -> Outcome {
    let three = vec![p(&[3]), p(&[3])];
    let pr = problem(&three);
    for (name, v) in [
        ("theorem1", count_theorem1(&pr).unwrap()),
        ("ps", count_ps(&pr).unwrap()),
        ("characters", count_fullcycle_characters(&three).unwrap()),
        ("oracle", oracle(&three)),
    ] {
        ensure(v == BigInt::one(), || format!("(3),(3): {name} gave {v}"))?;
    }
    let twos = vec![p(&[2, 1]), p(&[2, 1])];
    let pr = problem(&twos);
    for (name, v) in [
        ("theorem1", count_theorem1(&pr).unwrap()),
        ("ps", count_ps(&pr).unwrap()),
        ("characters", count_fullcycle_characters(&twos).unwrap()),
        ("oracle", oracle(&twos)),
        ("genus0", count_genus0(&pr).unwrap()),
    ] {
        ensure(v == BigInt::from(3), || format!("(2,1),(2,1): {name} gave {v}"))?;
    }

    // genus-1 decomposition for (3),(3): prefactor 3/4, the q = 1 term vanishes,
    // and the two tuples (p_1, p_2) = (1, 0), (0, 1) contribute 2/3 each
    let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
    let prefactor = BigRational::new(BigInt::from(3), BigInt::from(4) * p(&[3]).aut() * p(&[3]).aut());
    ensure(prefactor == q(3, 4), || format!("prefactor {prefactor}"))?;
    let q1 = p_value(1, 2, &[2, 2]);
    ensure(q1.is_zero(), || format!("q = 1 term {q1}"))?;
    let s = |k: usize| s_value(k, &p(&[3]));
    let weight = |k: usize| BigRational::from_integer(factorial(2 * k)) * s(k);
    let tuple_10 = weight(1) * weight(0) * p_value(0, 2, &[0, 2]);
    let tuple_01 = weight(0) * weight(1) * p_value(0, 2, &[2, 0]);
    ensure(tuple_10 == q(2, 3) && tuple_01 == q(2, 3), || format!("tuple terms {tuple_10}, {tuple_01}"))?;
    let total = &prefactor * (tuple_10 + tuple_01 + q1);
    ensure(total == q(1, 1), || format!("decomposition total {total}"))?;
    Ok("(3),(3) → 1 and (2,1),(2,1) → 3 on every engine; 3/4 · (2/3 + 2/3) = 1".into())
}

fn denes() -> Outcome {
    for n in 3..=8usize {
        let mut t = vec![2];
        t.extend(std::iter::repeat_n(1, n - 2));
        let alphas = vec![p(&t); n - 1];
        let expected = BigInt::from(n).pow(n as u32 - 2);
        let got = count_ps(&problem(&alphas)).unwrap();
        ensure(got == expected, || format!("n = {n}: ps {got}, expected {expected}"))?;
        if n <= 5 {
            let o = oracle(&alphas);
            ensure(o == expected, || format!("n = {n}: oracle {o}, expected {expected}"))?;
        }
    }
    Ok("n^(n-2) for n = 3..8 (oracle for n ≤ 5)".into())
}

fn genus0_random() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x6e75_7330);
    for case in 0..200 {
        let n = rng.random_range(2..=30usize);
        let m = rng.random_range(1..=(n - 1).min(6));
        // split n - 1 into m positive pieces r_i, each at most n - 1
        let mut cuts: Vec<usize> = Vec::new();
        while cuts.len() < m - 1 {
            let c = rng.random_range(1..n - 1);
            if !cuts.contains(&c) {
                cuts.push(c);
            }
        }
        cuts.sort_unstable();
        let mut bounds = vec![0];
        bounds.extend(cuts);
        bounds.push(n - 1);
        let alphas: Vec<Partition> =
            bounds.windows(2).map(|w| random_partition_with_len(&mut rng, n, n - (w[1] - w[0]))).collect();
        let pr = problem(&alphas);
        ensure(genus_of(&pr).genus == Some(0), || format!("case {case}: generator produced nonzero genus"))?;
        let closed = count_genus0(&pr).unwrap();
        let ps = count_ps(&pr).unwrap();
        ensure(closed == ps, || format!("case {case} {}: genus0 {closed}, ps {ps}", show(&alphas)))?;
    }
    Ok("200 random genus-0 problems, n ≤ 30".into())
}

fn rho_identities() -> Outcome {
    let mut count = 0;
    for n in 1..=20usize {
        for gamma in Partitions::of(n) {
            let table = rho_table(&gamma).unwrap();
            let closed = rho_closed(&gamma).unwrap();
            ensure(table == closed, || format!("γ = ({gamma}): expansion and closed form differ"))?;
            let expected_total = BigInt::from(2).pow(n as u32 - 1);
            ensure(table.total() == expected_total, || format!("γ = ({gamma}): row sum {}", table.total()))?;
            for (_, k, v) in table.iter() {
                ensure(!v.is_negative(), || format!("γ = ({gamma}): negative entry at k = {k}"))?;
                let parity_ok = (k + gamma.len()) % 2 == 1 || v.is_zero();
                ensure(parity_ok, || format!("γ = ({gamma}): nonzero entry at k = {k} of wrong parity"))?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} partitions, n ≤ 20"))
}

fn univariate(coeffs: &[i64]) -> MultiPoly {
    MultiPoly::from_terms(
        1,
        coeffs.iter().enumerate().map(|(e, &c)| (vec![e as u32], BigRational::from_integer(c.into()))),
    )
    .unwrap()
}

fn s_series() -> Outcome {
    let mut count = 0;
    for n in 1..=12usize {
        for gamma in Partitions::of(n) {
            let len = gamma.len();
            let mut rhs = MultiPoly::one(1);
            for &g in gamma.parts() {
                let plus = univariate(&[1, 1]).pow(g as u32);
                let minus = univariate(&[1, -1]).pow(g as u32);
                rhs = &rhs * &(&plus - &minus);
            }
            let lead = BigRational::from_integer(BigInt::from(2).pow(len as u32) * gamma.part_product());
            let mut lhs = MultiPoly::zero(1);
            let mut pp = 0;
            while len + 2 * pp <= n {
                let term = MultiPoly::monomial(
                    fullcycle::polynomial::Exponents::new(vec![(len + 2 * pp) as u32]),
                    &lead * s_value(pp, &gamma),
                );
                lhs = &lhs + &term;
                pp += 1;
            }
            ensure(lhs == rhs, || format!("γ = ({gamma}): {lhs} ≠ {rhs}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} partitions, n ≤ 12"))
}

fn random_homogeneous(rng: &mut StdRng, arity: usize, degree: u32) -> MultiPoly {
    let terms = rng.random_range(1..=6);
    let mut f = MultiPoly::zero(arity);
    for _ in 0..terms {
        let mut exps = vec![0u32; arity];
        for _ in 0..degree {
            exps[rng.random_range(0..arity)] += 1;
        }
        let c = BigRational::new(rng.random_range(-9..=9i64).into(), rng.random_range(1..=4i64).into());
        f = &f + &MultiPoly::monomial(fullcycle::polynomial::Exponents::new(exps), c);
    }
    f
}

fn extraction_lemma() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x6578_7472);
    for case in 0..500 {
        let arity = rng.random_range(1..=3usize);
        let t: Vec<u32> = (0..arity).map(|_| rng.random_range(0..=5u32)).collect();
        let total: u32 = t.iter().sum();
        let s = rng.random_range(total.saturating_sub(10)..=total);
        let f = random_homogeneous(&mut rng, arity, total - s);
        let e1 = MultiPoly::elem_sym(1, arity);
        let lhs = coefficient_of(&(&e1.pow(s) * &f), &t).unwrap()
            * BigRational::from_integer(t.iter().fold(BigInt::one(), |a, &x| a * factorial(x as usize)));
        let ti: Vec<i64> = t.iter().map(|&x| x as i64).collect();
        let rhs = BigRational::from_integer(factorial(s as usize)) * d_eval(&f, &ti).unwrap();
        ensure(lhs == rhs, || format!("case {case}: f = {f}, t = {t:?}, s = {s}: {lhs} ≠ {rhs}"))?;
    }
    Ok("500 random homogeneous polynomials, arity ≤ 3, degree ≤ 10".into())
}

fn hook_characters() -> Outcome {
    for n in 1..=8usize {
        for gamma in Partitions::of(n) {
            for a in 0..n {
                let b = n - 1 - a;
                let h = hook_char(a, b, &gamma).unwrap();
                let mn = mn_character(&Partition::hook(a, b), &gamma).unwrap();
                ensure(h == mn, || format!("(a|b) = ({a}|{b}), γ = ({gamma}): series {h}, border strips {mn}"))?;
            }
        }
    }
    for n in 1..=10usize {
        for gamma in Partitions::of(n) {
            let trivial = hook_char(n - 1, 0, &gamma).unwrap();
            ensure(trivial.is_one(), || format!("trivial character at ({gamma}) is {trivial}"))?;
            let sign = hook_char(0, n - 1, &gamma).unwrap();
            let expected = if (n - gamma.len()) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            ensure(sign == expected, || format!("sign character at ({gamma}) is {sign}"))?;
        }
    }
    Ok("hook values match border strips for n ≤ 8; trivial and sign columns for n ≤ 10".into())
}

fn invalid_genus_zero() -> Outcome {
    let mut cases = 0;
    for n in 1..=6usize {
        let parts: Vec<Partition> = Partitions::of(n).collect();
        for m in 1..=3 {
            for alphas in tuples(&parts, m) {
                let pr = problem(&alphas);
                if genus_of(&pr).genus.is_some() {
                    continue;
                }
                let t1 = count_theorem1(&pr).unwrap();
                let ps = count_ps(&pr).unwrap();
                let ch = count_fullcycle_characters(&alphas).unwrap();
                let o = oracle(&alphas);
                ensure(t1.is_zero() && ps.is_zero() && ch.is_zero() && o.is_zero(), || {
                    format!("{}: theorem1 {t1}, ps {ps}, characters {ch}, oracle {o}", show(&alphas))
                })?;
                ensure(matches!(count_genus0(&pr), Err(Error::NotGenusZero(_))), || {
                    format!("{}: genus0 did not refuse", show(&alphas))
                })?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} tuples with odd or negative 2g, n ≤ 6, m ≤ 3"))
}

fn timing() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x7363_616c);
    let mut worst_ps = Duration::ZERO;
    for _ in 0..3 {
        let pr = random_valid_problem(&mut rng, 40, 4);
        let start = Instant::now();
        let v = count_ps(&pr).unwrap();
        let dt = start.elapsed();
        worst_ps = worst_ps.max(dt);
        ensure(dt < Duration::from_secs(10), || format!("ps on {} took {dt:?}", show(pr.alphas())))?;
        let ch = count_fullcycle_characters(pr.alphas()).unwrap();
        ensure(v == ch, || format!("ps {v} ≠ characters {ch} on {}", show(pr.alphas())))?;
    }
    let mut worst_t1 = Duration::ZERO;
    for _ in 0..3 {
        let pr = random_valid_problem(&mut rng, 14, 4);
        let start = Instant::now();
        let v = count_theorem1(&pr).unwrap();
        let dt = start.elapsed();
        worst_t1 = worst_t1.max(dt);
        ensure(dt < Duration::from_secs(60), || format!("theorem1 on {} took {dt:?}", show(pr.alphas())))?;
        let ps = count_ps(&pr).unwrap();
        ensure(v == ps, || format!("theorem1 {v} ≠ ps {ps} on {}", show(pr.alphas())))?;
    }
    Ok(format!(
        "ps n = 40, m = 4: worst {worst_ps:.2?} (< 10 s); theorem1 n = 14, m = 4: worst {worst_t1:.2?} (< 60 s)"
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("engines agree with the oracle", engines_agree_small),
        ("worked examples", worked_examples),
        ("Dénes transposition count", denes),
        ("genus-0 product formula", genus0_random),
        ("ρ table identities", rho_identities),
        ("S_p generating series", s_series),
        ("coefficient extraction through 𝔇", extraction_lemma),
        ("hook characters", hook_characters),
        ("invalid genus gives zero", invalid_genus_zero),
        ("scale", timing),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into());
            Err(msg)
        });
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                println!("FAIL {:>2} {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", criteria.len());
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
