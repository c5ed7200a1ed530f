//! Acceptance suite. One line per criterion; nonzero exit if any fails.
//!
//! Every comparison is exact (zero tolerance).

use std::process::{Command, ExitCode};

use lehmer_core::{
    closed_factors, det_closed, det_cofactor, dyck_count, dyck_gf_check, gauss_pascal,
    gauss_product, invert_poch, lambda_rec, lambda_sum, lehmer_matrix, limit_det, lu_generic,
    product_check, stabilization_threshold, BigInt, BigUint, Poly2, Series2,
};
use num_traits::{One, Zero};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn determinant_theorem() -> Outcome {
    for n in 1..=14 {
        let m = lehmer_matrix(n).map_err(|e| e.to_string())?;
        ensure(det_cofactor(&m) == lambda_sum(n as u32), || {
            format!("n = {n}")
        })?;
    }
    Ok(())
}

fn lu_correctness() -> Outcome {
    for n in 1..=16 {
        let m = lehmer_matrix(n).map_err(|e| e.to_string())?;
        let f = closed_factors(n).map_err(|e| e.to_string())?;
        product_check(&f, &m).map_err(|e| format!("n = {n}: {e}"))?;
        let lu = f.l_dense().mul(&f.u_dense()).map_err(|e| e.to_string())?;
        for i in 0..n {
            for j in 0..n {
                if i.abs_diff(j) >= 2 {
                    ensure(lu.get(i, j).is_zero(), || {
                        format!("n = {n}: (LU)[{i},{j}] != 0")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn factor_rediscovery() -> Outcome {
    for n in 1..=12 {
        let m = lehmer_matrix(n).map_err(|e| e.to_string())?;
        let found = lu_generic(&m).map_err(|e| format!("n = {n}: {e}"))?;
        let closed = closed_factors(n).map_err(|e| e.to_string())?;
        if let Some((band, i)) = found.first_difference(&closed) {
            return Err(format!("n = {n}: {band}[{i}] differs"));
        }
    }
    Ok(())
}

fn recursion() -> Outcome {
    let sums: Vec<Poly2> = (0..=24).map(lambda_sum).collect();
    for j in 2..=24usize {
        // λ(j) = λ(j-1) - z q^(j-2) λ(j-2)
        let rhs = &sums[j - 1] - &(&(&Poly2::z() * &Poly2::q().pow(j as u32 - 2)) * &sums[j - 2]);
        ensure(sums[j] == rhs, || format!("recursion fails at j = {j}"))?;
    }
    let rec = lambda_rec(24);
    for (j, s) in sums.iter().enumerate() {
        ensure(s == rec.get(j), || {
            format!("lambda_sum != lambda_rec at j = {j}")
        })?;
    }
    Ok(())
}

fn limit_formula() -> Outcome {
    let (k, d) = (4usize, 10u32);
    let n = stabilization_threshold(k, d);
    ensure(n == 12, || format!("certified threshold changed: {n}"))?;
    let finite = Series2::from_poly(&det_closed(n).map_err(|e| e.to_string())?, k, d)
        .map_err(|e| e.to_string())?;
    ensure(finite == limit_det(k, d), || {
        format!("truncation of det M({n}) != limit_det(4, 10)")
    })?;

    for n in 3..=12usize {
        let z1 = det_closed(n)
            .map_err(|e| e.to_string())?
            .as_qz()
            .map_err(|e| e.to_string())?
            .z_coeff(1);
        // -1/(1-q) expanded one degree past the expected disagreement
        let minus_geometric = -invert_poch(1, n as u32);
        for e in 0..=(n as u32 - 2) {
            ensure(
                z1.coeff(2 * e, 0) == minus_geometric.coeff(2 * e, 0),
                || format!("n = {n}: differs at q^{e}"),
            )?;
        }
        let top = 2 * (n as u32 - 1);
        ensure(z1.coeff(top, 0) != minus_geometric.coeff(top, 0), || {
            format!("n = {n}: still agrees at q^{}", n - 1)
        })?;
    }
    Ok(())
}

fn binomial(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn qbinomial_ground_truth() -> Outcome {
    for n in 0..=16u32 {
        for k in 0..=n {
            let (ki, ni) = (i64::from(k), i64::from(n));
            let g = gauss_pascal(n, ki);
            ensure(g == gauss_product(n, ki), || {
                format!("pascal != product at ({n}, {k})")
            })?;
            ensure(g == gauss_pascal(n, ni - ki), || {
                format!("symmetry fails at ({n}, {k})")
            })?;
            ensure(g.degree_u() == Some(2 * k * (n - k)), || {
                format!("degree wrong at ({n}, {k})")
            })?;
            let positive = (0..=k * (n - k)).all(|e| g.coeff(2 * e, 0) > BigInt::zero())
                && g.len() as u32 == k * (n - k) + 1;
            ensure(positive, || {
                format!("non-positive coefficient at ({n}, {k})")
            })?;
            ensure(g.eval_u1() == Poly2::constant(binomial(n, k)), || {
                format!("q = 1 specialization wrong at ({n}, {k})")
            })?;
        }
    }
    Ok(())
}

fn catalan(m: u64) -> BigUint {
    (0..m).fold(BigUint::one(), |c, i| c * (2 * (2 * i + 1)) / (i + 2))
}

fn dyck_paths() -> Outcome {
    for h in 0..=6 {
        ensure(dyck_gf_check(h, 8), || {
            format!("generating function fails at h = {h}")
        })?;
    }
    for m in 0..=8usize {
        for h in m..=m + 3 {
            ensure(dyck_count(m, h) == catalan(m as u64), || {
                format!("m = {m}, h = {h}")
            })?;
        }
    }
    Ok(())
}

fn fibonacci() -> Outcome {
    let lambda = lambda_rec(20);
    let (mut prev, mut cur) = (BigInt::zero(), BigInt::one());
    for j in 0..=20 {
        let v = lambda
            .get(j)
            .eval_qz(&BigInt::one(), &BigInt::from(-1))
            .map_err(|e| e.to_string())?;
        ensure(v == cur, || {
            format!("λ({j})(1, -1) = {v}, F({}) = {cur}", j + 1)
        })?;
        let next = &prev + &cur;
        prev = cur;
        cur = next;
    }
    Ok(())
}

fn determinism() -> Outcome {
    let commands: &[&[&str]] = &[
        &["lambda", "7"],
        &["matrix", "5"],
        &["det", "9"],
        &["lu", "5"],
        &["verify", "6"],
        &["qbinom", "9", "4"],
        &["limit", "--zdeg", "4", "--qdeg", "10"],
        &["stabilize", "10", "2"],
        &["dyck", "8", "3"],
        &["--json", "lambda", "7"],
        &["--json", "matrix", "5"],
        &["--json", "lu", "5"],
        &["--json", "verify", "6"],
        &["--json", "limit", "--zdeg", "4", "--qdeg", "10"],
        &["--json", "stabilize", "10", "0"],
        &["--json", "dyck", "8", "3"],
    ];
    for args in commands {
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_lehmer"))
                .args(*args)
                .output()
                .map_err(|e| e.to_string())
        };
        let (a, b) = (run()?, run()?);
        ensure(a.status.success(), || {
            format!("{args:?} exited with {}", a.status)
        })?;
        ensure(a.stdout == b.stdout && a.status == b.status, || {
            format!("{args:?} differs between runs")
        })?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("AC1 determinant theorem, n <= 14", determinant_theorem),
        ("AC2 LU = M with off-band zeros, n <= 16", lu_correctness),
        (
            "AC3 generic LU rediscovers closed factors, n <= 12",
            factor_rediscovery,
        ),
        (
            "AC4 three-term recursion and sum = recursion, j <= 24",
            recursion,
        ),
        ("AC5 limit series and z^1 stabilization", limit_formula),
        (
            "AC6 q-binomial ground truth, n <= 16",
            qbinomial_ground_truth,
        ),
        ("AC7 bounded-height Dyck paths", dyck_paths),
        ("AC8 Fibonacci specialization, j <= 20", fibonacci),
        ("AC9 CLI output is deterministic", determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(()) => println!("PASS {name}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} acceptance criteria failed");
        ExitCode::FAILURE
    }
}
