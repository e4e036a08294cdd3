//! Acceptance suite. Prints one line per criterion and exits nonzero if any fails.

mod common;

use std::collections::BTreeMap;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use spectral_knots::algebra::{basis_monomials, dim_y, reduce_factors, reduce_factors_with, Strand};
use spectral_knots::chord::dim_a;
use spectral_knots::report::{run_e2, Command, RunConfig};
use spectral_knots::sinha::{
    d1_matrix, degenerate_quotient_dim, e1_page, e2_entry, e2_page, kan_unit_check, kan_unit_check_variant,
    normalized_basis, normalized_dim_formula, on_lattice, vassiliev_e1_view, Bidegree, KanVariant, PageLabel,
    PageTable,
};
use spectral_knots::{Error, Field};

use common::PresentedAlgebra;

type Outcome = Result<String, String>;

fn fields() -> [Field; 3] {
    [Field::Rationals, Field::prime(2).unwrap(), Field::prime(3).unwrap()]
}

fn diagonal_equality() -> Outcome {
    let mut seen = Vec::new();
    for field in fields() {
        for n in 1..=5usize {
            let a = dim_a(n, field);
            let e = e2_entry(2 * n, n, 2 * n, field).map_err(|e| e.to_string())?;
            if a != e {
                return Err(format!("{field} n_diag={n}: dim_A={a} but E2={e}"));
            }
            seen.push(a);
        }
    }
    Ok(format!("n_diag 1..5 over Q, F2, F3; dims over Q {:?}", &seen[..5]))
}

/// Coefficients of (1+t)^l * prod_{i=1}^{l-1} (1+it).
fn poincare(l: usize) -> Vec<u128> {
    let mut p = vec![1u128];
    let mut mul = |c: u128| {
        let mut q = vec![0u128; p.len() + 1];
        for (i, &v) in p.iter().enumerate() {
            q[i] += v;
            q[i + 1] += c * v;
        }
        p = q;
    };
    for _ in 0..l {
        mul(1);
    }
    for i in 1..l {
        mul(i as u128);
    }
    p
}

fn complex_properties() -> Outcome {
    for field in [Field::Rationals, Field::prime(2).unwrap()] {
        for k in 0..=4 {
            for l in 1..=8 as Strand {
                let d_out = d1_matrix(l - 1, k, field);
                let d_in = d1_matrix(l, k, field);
                if !d_out.compose(&d_in).map_err(|e| e.to_string())?.is_zero() {
                    return Err(format!("d1 d1 != 0 at l={l}, k={k}, {field}"));
                }
            }
        }
    }
    for l in 0..=6 as Strand {
        for k in 0..=4 {
            let comb = normalized_basis(l, k).len();
            let incl = normalized_dim_formula(l, k);
            let quot = degenerate_quotient_dim(l, k, Field::Rationals);
            if comb as i128 != incl || comb != quot {
                return Err(format!("normalized l={l} k={k}: {comb} / {incl} / {quot}"));
            }
        }
    }
    for l in 0..=6usize {
        let p = poincare(l);
        for (k, &c) in p.iter().enumerate() {
            let enumerated = basis_monomials(l as Strand, k).len() as u128;
            if c != dim_y(l as Strand, k) || c != enumerated {
                return Err(format!("Poincare l={l} k={k}: expected {c}"));
            }
        }
        if dim_y(l as Strand, p.len()) != 0 {
            return Err(format!("Poincare l={l}: nonzero above top degree"));
        }
    }
    Ok("d1^2=0 (l<=8,k<=4,Q,F2); normalized triple (l<=6,k<=4); Poincare (l<=6)".into())
}

fn random_factors(rng: &mut StdRng) -> (Strand, Vec<(Strand, Strand)>) {
    let l = rng.gen_range(2..=6);
    let k = rng.gen_range(1..=5);
    let f = (0..k).map(|_| (rng.gen_range(1..=l), rng.gen_range(1..=l))).collect();
    (l, f)
}

fn rewriting_oracle() -> Outcome {
    for l in 1..=4u16 {
        for k in 0..=3 {
            let alg = PresentedAlgebra::new(l, k);
            let q = alg.quotient_dim() as u128;
            if q != dim_y(l, k) || q != basis_monomials(l, k).len() as u128 {
                return Err(format!("l={l} k={k}: quotient {q}, dim_Y {}", dim_y(l, k)));
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for trial in 0..1000 {
        let (_, f) = random_factors(&mut rng);
        let canonical = reduce_factors(&f);
        for _ in 0..3 {
            let other = reduce_factors_with(&f, &mut |n| rng.gen_range(0..n));
            if other != canonical {
                return Err(format!("confluence fails on trial {trial}: {f:?}"));
            }
        }
    }
    Ok("quotient rank == dim_Y (l<=4,k<=3); 1000 random monomials confluent".into())
}

fn kan_check() -> Outcome {
    for field in [Field::Rationals, Field::prime(2).unwrap()] {
        for n in 1..=3 {
            let r = kan_unit_check(n, 3, field).map_err(|e| e.to_string())?;
            if !(r.equal && r.unit_is_chain_map && r.cone_acyclic) {
                return Err(format!("n={n} {field}: lhs {:?} rhs {:?}", r.lhs_dims, r.rhs_dims));
            }
        }
    }
    // A sign flip is invisible in characteristic 2, so the control runs over Q and F3.
    for field in [Field::Rationals, Field::prime(3).unwrap()] {
        let bad = kan_unit_check_variant(2, 2, field, KanVariant::CorruptedSign).map_err(|e| e.to_string())?;
        if bad.equal && bad.cone_acyclic {
            return Err(format!("corrupted control passed over {field}"));
        }
    }
    Ok("n=1,2,3 (k<=3) over Q and F2 agree in every total degree; sign-corrupted control rejected over Q and F3".into())
}

fn off_lattice() -> Outcome {
    let mut checked = 0;
    for field in [Field::Rationals, Field::prime(2).unwrap()] {
        for page in [e1_page(5, 4, field), e2_page(5, 4, field)] {
            let page = page.map_err(|e| e.to_string())?;
            for col in -6..=0 {
                for row in 0..=9 {
                    let b = Bidegree::new(col, row);
                    if !on_lattice(b) && page.get(b) != 0 {
                        return Err(format!("nonzero off-lattice entry at {b}"));
                    }
                    checked += 1;
                }
            }
            if page.label == PageLabel::SinhaE2 {
                vassiliev_e1_view(&page).map_err(|e| e.to_string())?;
            }
        }
    }
    let mut entries = BTreeMap::new();
    entries.insert(Bidegree::new(-2, 3), 1);
    let bogus = PageTable { label: PageLabel::SinhaE2, field: Field::Rationals, truncation: 3, entries };
    match vassiliev_e1_view(&bogus) {
        Err(Error::Consistency(_)) => Ok(format!("{checked} bidegrees checked; negative test raises consistency error")),
        other => Err(format!("negative test returned {other:?}")),
    }
}

fn determinism() -> Outcome {
    let cfg = RunConfig::new(Command::E2, 4, 3, "q").map_err(|e| e.to_string())?;
    let a = run_e2(&cfg).map_err(|e| e.to_string())?;
    let b = run_e2(&cfg).map_err(|e| e.to_string())?;
    let ja = serde_json::to_string(&a.record.payload).unwrap();
    let jb = serde_json::to_string(&b.record.payload).unwrap();
    if ja != jb {
        return Err("payloads differ between runs".into());
    }
    let dir = tempfile::tempdir().unwrap();
    let mut cached = cfg.clone();
    cached.cache_dir = Some(dir.path().to_path_buf());
    let c = run_e2(&cached).map_err(|e| e.to_string())?;
    let d = run_e2(&cached).map_err(|e| e.to_string())?;
    let jc = serde_json::to_string(&c.record.payload).unwrap();
    let jd = serde_json::to_string(&d.record.payload).unwrap();
    if jc != ja || jd != ja || !d.cache_hit {
        return Err("cached run differs or missed".into());
    }
    Ok(format!("{} bytes, identical across fresh and cached runs", ja.len()))
}

fn main() {
    let criteria: [(&str, &str, fn() -> Outcome); 6] = [
        ("AC1", "cross-pipeline diagonal equality", diagonal_equality),
        ("AC2", "complex property suite", complex_properties),
        ("AC3", "rewriting oracle equivalence", rewriting_oracle),
        ("AC4", "Kan-extension check", kan_check),
        ("AC5", "off-lattice vanishing", off_lattice),
        ("AC6", "determinism", determinism),
    ];
    let mut failed = 0;
    for (id, name, f) in criteria {
        let start = Instant::now();
        let res = f();
        let ms = start.elapsed().as_millis();
        match res {
            Ok(detail) => println!("[PASS] {id} {name}: {detail} ({ms} ms)"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {id} {name}: {detail} ({ms} ms)");
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
