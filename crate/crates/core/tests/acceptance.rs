//! Acceptance suite. Runs without the test harness so that every criterion
//! prints one line; all identities are exact (tolerance zero).

use std::time::{Duration, Instant};

use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::TestRunner;

use superyang::arith::{Poly, Rat, RationalFunction};
use superyang::hw::{
    check_consistency, complete_weights, drinfeld_of_module, extract_weights, find_highest_vectors,
    hw_tensor_product_check, solve_shift_quotient, xi_vector, HighestWeight,
};
use superyang::rep::{
    central_series, check_defrel, check_rtt, compute_vplus, fundamental_module, fundamental_tensor, gl_check,
    osp_embed, reduce_rep, shift_rep, vector_central_series, vector_rep, RepModule, TupleSelection,
};
use superyang::superlin::{check_ybe, GradedSpace, Mutation};
use superyang::Report;

type Outcome = Result<String, String>;

fn space(n: usize) -> GradedSpace {
    GradedSpace::new(n).unwrap()
}

fn need(r: &Report) -> Result<(), String> {
    if r.passed() {
        Ok(())
    } else {
        Err(r.summary())
    }
}

fn lr(a: i64, b: i64) -> RationalFunction {
    RationalFunction::linear_ratio(&Rat::from(a), &Rat::from(b))
}

/// Vector modules for n <= 3, shifted tensor powers and the spans of
/// `xi_k` for k <= n <= 3.
struct Modules {
    vectors: Vec<RepModule>,
    tensors: Vec<(usize, usize, RepModule)>,
    spans: Vec<(usize, usize, RepModule)>,
}

impl Modules {
    fn build() -> Self {
        let mut tensors = Vec::new();
        let mut spans = Vec::new();
        for n in 1..=3 {
            for k in 1..=n {
                tensors.push((n, k, fundamental_tensor(&space(n), k).unwrap()));
                spans.push((n, k, fundamental_module(&space(n), k).unwrap()));
            }
        }
        Modules {
            vectors: (1..=3).map(|n| vector_rep(&space(n))).collect(),
            tensors,
            spans,
        }
    }
}

fn c1_ybe() -> Outcome {
    let mut out = Vec::new();
    for n in 1..=2 {
        let t = Instant::now();
        need(&check_ybe(&space(n), 8).map_err(|e| e.to_string())?)?;
        let el = t.elapsed();
        if el > Duration::from_secs(10) {
            return Err(format!("n={n} took {el:?}"));
        }
        out.push(format!("n={n} {:.2}s", el.as_secs_f64()));
    }
    Ok(format!("8x8 grid, {}", out.join(", ")))
}

fn c2_rtt(m: &Modules) -> Outcome {
    let start = Instant::now();
    let mut largest = 0;
    for v in &m.vectors {
        need(&check_rtt(v, None).map_err(|e| e.to_string())?)?;
    }
    for (_, _, t) in &m.tensors {
        need(&check_rtt(t, None).map_err(|e| e.to_string())?)?;
        largest = largest.max(t.dim());
    }
    let el = start.elapsed();
    if el > Duration::from_secs(300) {
        return Err(format!("took {el:?}"));
    }
    Ok(format!(
        "vector n<=3 and {} tensor modules, largest d={largest}, {:.1}s",
        m.tensors.len(),
        el.as_secs_f64()
    ))
}

fn c3_defrel() -> Outcome {
    let v1 = vector_rep(&space(1));
    need(&check_defrel(&v1, None, TupleSelection::All).map_err(|e| e.to_string())?)?;
    let v2 = vector_rep(&space(2));
    need(&check_defrel(&v2, None, TupleSelection::Sample(50)).map_err(|e| e.to_string())?)?;
    Ok("81 tuples at n=1, 50 sampled at n=2".into())
}

/// The highest vector of a module with a one-dimensional highest space.
fn highest(rep: &RepModule) -> Result<Vec<Rat>, String> {
    let hv = find_highest_vectors(rep).map_err(|e| e.to_string())?;
    if hv.len() != 1 {
        return Err(format!("{} highest vectors in {rep:?}", hv.len()));
    }
    let mut x = vec![Rat::zero(); rep.dim()];
    for (i, v) in &hv[0] {
        x[*i as usize] = v.clone();
    }
    Ok(x)
}

fn prop32(rep: &RepModule, hw: &HighestWeight) -> Result<(), String> {
    let n = rep.n();
    let (c, r) = central_series(rep).map_err(|e| e.to_string())?;
    need(&r)?;
    let shift = Rat::from(n as i64) + Rat::new(1, 2);
    let want = hw.get(1) * &hw.get(2 * n + 1).shift_arg(&shift);
    if c.as_ref() != Some(&want) {
        return Err(format!("{rep:?}: c(u) = {c:?}, lambda formula {want}"));
    }
    Ok(())
}

fn c4_central(m: &Modules) -> Outcome {
    let mut count = 0;
    for v in &m.vectors {
        let (c, r) = central_series(v).map_err(|e| e.to_string())?;
        need(&r)?;
        if c != Some(vector_central_series()) {
            return Err(format!("vector n={}: c(u) = {c:?}", v.n()));
        }
        let hw = extract_weights(v, &highest(v)?).map_err(|e| e.to_string())?;
        prop32(v, &hw)?;
        count += 1;
    }
    for (n, k, t) in &m.tensors {
        let hw = extract_weights(t, &xi_vector(&space(*n), *k).unwrap()).map_err(|e| e.to_string())?;
        prop32(t, &hw)?;
        count += 1;
    }
    for (_, _, s) in &m.spans {
        let hw = extract_weights(s, &highest(s)?).map_err(|e| e.to_string())?;
        prop32(s, &hw)?;
        count += 1;
    }
    Ok(format!("scalar on {count} modules; vector c(u) = (u^2-1)/u^2; c = l1(u) l1'(u+n+1/2)"))
}

fn c5_weights(m: &Modules) -> Outcome {
    for (n, k, t) in &m.tensors {
        let (n, k) = (*n, *k);
        let xi = xi_vector(&space(n), k).unwrap();
        let hw = extract_weights(t, &xi).map_err(|e| e.to_string())?;
        for i in 1..=n + 1 {
            let want = if i <= k { lr(k as i64, k as i64 - 1) } else { RationalFunction::one() };
            if hw.get(i) != &want {
                return Err(format!("n={n} k={k}: lambda_{i} = {} not {want}", hw.get(i)));
            }
        }
        // t_ij(u) xi_k = 0 for 1 <= i < j <= n+1, at deg D + 1 points
        let (x, _) = superyang::linalg::clear_denominators(&superyang::hw::sparse_of(&xi));
        for u in t.sample_points(t.degree() + 1, |_| true) {
            let a = t.eval(&u).map_err(|e| e.to_string())?;
            for i in 1..=n + 1 {
                for j in i + 1..=n + 1 {
                    if !a.op(i, j).mul_vec(&x).is_empty() {
                        return Err(format!("n={n} k={k}: t_{i}{j}({u}) xi != 0"));
                    }
                }
            }
        }
    }
    Ok("lambda_i = (u-k)/(u-k+1) for i<=k, 1 for k<i<=n+1; raising operators kill xi_k".into())
}

fn c6_drinfeld(m: &Modules) -> Outcome {
    for (n, k, s) in &m.spans {
        let r = drinfeld_of_module(s).map_err(|e| e.to_string())?;
        let want: Vec<Poly> = (1..=*n)
            .map(|i| if i == *k { Poly::linear_root(&Rat::from(*k as i64)) } else { Poly::one() })
            .collect();
        match r.drinfeld.tuple() {
            Some(t) if t.polys == want => {}
            _ => return Err(format!("n={n} k={k}: {}", r.summary())),
        }
    }
    let mut runner = TestRunner::deterministic();
    let coeffs = proptest::collection::vec(-6i64..=6, 0..=4);
    let mut trials = 0;
    for _ in 0..200 {
        let c = coeffs.new_tree(&mut runner).map_err(|e| e.to_string())?.current();
        let mut v: Vec<Rat> = c.iter().map(|&x| Rat::from(x)).collect();
        v.push(Rat::one());
        let p = Poly::new(v);
        let q = RationalFunction::new(p.shift(&Rat::one()), p.clone()).unwrap();
        let got = solve_shift_quotient(q.num(), q.den());
        if got.as_ref() != Some(&p) {
            return Err(format!("round trip of {p} gave {got:?}"));
        }
        trials += 1;
    }
    Ok(format!("P_k = u-k on {} modules; {trials} random round trips", m.spans.len()))
}

fn c7_consistency(m: &Modules) -> Outcome {
    let mut count = 0;
    let mut check = |rep: &RepModule, xi: &[Rat]| -> Result<(), String> {
        let hw = extract_weights(rep, xi).map_err(|e| e.to_string())?;
        need(&check_consistency(&hw))?;
        let n = rep.n();
        let full = complete_weights(&hw.lambda[..=n], rep.space()).map_err(|e| e.to_string())?;
        if full != hw {
            return Err(format!("{rep:?}: completed {:?} vs extracted {:?}", full.lambda, hw.lambda));
        }
        count += 1;
        Ok(())
    };
    for v in &m.vectors {
        check(v, &highest(v)?)?;
    }
    for (n, k, t) in &m.tensors {
        check(t, &xi_vector(&space(*n), *k).unwrap())?;
    }
    for (_, _, s) in &m.spans {
        check(s, &highest(s)?)?;
    }
    Ok(format!("{count} highest weights consistent and completed exactly"))
}

fn c8_reduction(m: &Modules) -> Outcome {
    let basis = compute_vplus(&m.vectors[1]).map_err(|e| e.to_string())?;
    if basis != vec![vec![(0u32, Rat::one())]] {
        return Err(format!("V+ of vector n=2 is {basis:?}"));
    }
    let mut count = 0;
    for v in &m.vectors[1..] {
        need(&reduce_rep(v, None).map_err(|e| e.to_string())?.1)?;
        count += 1;
    }
    for (n, _, s) in &m.spans {
        if *n >= 2 {
            need(&reduce_rep(s, None).map_err(|e| e.to_string())?.1)?;
            count += 1;
        }
    }
    Ok(format!("V+ = span(e1); {count} reductions pass RTT for n-1"))
}

fn c9_embeddings(m: &Modules) -> Outcome {
    for v in &m.vectors[..2] {
        need(&osp_embed(v).map_err(|e| e.to_string())?.1)?;
    }
    let mut count = 0;
    for rep in m.vectors.iter().chain(m.tensors.iter().map(|x| &x.2)).chain(m.spans.iter().map(|x| &x.2)) {
        need(&gl_check(rep, None).map_err(|e| e.to_string())?)?;
        count += 1;
    }
    Ok(format!("osp brackets for n<=2; gl relations on {count} modules"))
}

fn c10_multiplicativity() -> Outcome {
    let s = space(2);
    let a = fundamental_module(&s, 1).map_err(|e| e.to_string())?;
    need(&hw_tensor_product_check(&a, &a).map_err(|e| e.to_string())?)?;
    let shift = Rat::new(2, 7);
    let b = shift_rep(&a, &shift);
    need(&hw_tensor_product_check(&a, &b).map_err(|e| e.to_string())?)?;
    let t = superyang::rep::tensor_rep(&[a.clone(), b], &[Rat::zero(), Rat::zero()]).unwrap();
    let xi = {
        let x = highest(&a)?;
        let y = x.clone();
        x.iter().flat_map(|p| y.iter().map(move |q| p * q)).collect::<Vec<_>>()
    };
    let hw = extract_weights(&t, &xi).map_err(|e| e.to_string())?;
    let d = superyang::hw::drinfeld_of_weights(&hw);
    let want = &Poly::linear_root(&Rat::one()) * &Poly::linear_root(&(Rat::one() - shift));
    match d.tuple() {
        Some(p) if p.polys[0] == want && p.polys[1].is_one() => Ok(format!("P_1 = {want} for the shifted pair")),
        _ => Err(format!("Drinfeld data {d:?}")),
    }
}

fn c11_mutations() -> Outcome {
    let mut out = Vec::new();
    for m in [Mutation::Wrap, Mutation::Theta, Mutation::QSign] {
        let s = space(1).with_mutation(Some(m));
        let v = vector_rep(&s);
        let reports = [
            check_rtt(&v, None).map_err(|e| e.to_string())?,
            check_ybe(&s, 8).map_err(|e| e.to_string())?,
            check_defrel(&v, None, TupleSelection::All).map_err(|e| e.to_string())?,
        ];
        let caught: Vec<&str> = reports
            .iter()
            .filter(|r| !r.passed() && r.witness.is_some())
            .map(|r| r.check.as_str())
            .collect();
        if caught.is_empty() {
            return Err(format!("{m:?} not caught"));
        }
        out.push(format!("{m:?} by {}", caught.join("+")));
    }
    Ok(out.join(", "))
}

fn main() {
    let start = Instant::now();
    let modules = Modules::build();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("1 yang-baxter", Box::new(c1_ybe)),
        ("2 rtt homomorphism", Box::new(|| c2_rtt(&modules))),
        ("3 defining relations", Box::new(c3_defrel)),
        ("4 central series", Box::new(|| c4_central(&modules))),
        ("5 fundamental eigenvalues", Box::new(|| c5_weights(&modules))),
        ("6 drinfeld extraction", Box::new(|| c6_drinfeld(&modules))),
        ("7 consistency", Box::new(|| c7_consistency(&modules))),
        ("8 reduction", Box::new(|| c8_reduction(&modules))),
        ("9 embeddings", Box::new(|| c9_embeddings(&modules))),
        ("10 multiplicativity", Box::new(c10_multiplicativity)),
        ("11 mutation sensitivity", Box::new(c11_mutations)),
    ];
    let mut failed = 0;
    for (name, f) in &criteria {
        let t = Instant::now();
        let r = f();
        let el = t.elapsed().as_secs_f64();
        match r {
            Ok(msg) => println!("criterion {name}: PASS (exact) [{el:.1}s] {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {name}: FAIL (exact) [{el:.1}s] {msg}");
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
