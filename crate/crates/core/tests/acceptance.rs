//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fails.

use std::process::ExitCode;

use siltlab::verify::{run_suite, VerifyOptions};
use siltlab::{DerivedCat, QuiverA};

/// Counts for `A_2`, d = 2 straight from derived Hom on labels: silting pairs in
/// the fundamental domain, and 2-cluster-tilting sets of `D/ν_2` where `ν_2`
/// lowers labels by 5 and `[1]` raises them by 3.
fn a2_d2_by_labels() -> (usize, usize) {
    let cat = DerivedCat::new(&"a2".parse::<QuiverA>().unwrap()).unwrap();
    let obj = |l: i64| cat.a2_object(l).unwrap();
    let hom = |x: i64, y: i64| cat.hom(obj(x), obj(y));

    // modules in degree 0 and projectives in degree 1
    let mut domain: Vec<i64> = (-12..=12)
        .filter(|&l| {
            let x = obj(l);
            x.shift == 0 || (x.shift == 1 && cat.is_projective(x.module))
        })
        .collect();
    domain.sort_unstable();
    let rigid = |a: i64, b: i64| (1..=6).all(|i| hom(a, b + 3 * i) == 0 && hom(b, a + 3 * i) == 0);
    let mut silt = 0;
    for (i, &a) in domain.iter().enumerate() {
        for &b in &domain[i + 1..] {
            silt += usize::from(rigid(a, b));
        }
    }

    let hom_orbit = |x: i64, y: i64| -> u32 { (-6..=6).map(|k| hom(x, y + 3 + 5 * k)).sum() };
    let mut ct = 0;
    for mask in 1u32..1 << 5 {
        let u: Vec<i64> = (0..5).filter(|i| mask >> i & 1 == 1).collect();
        let closed = (0..5).all(|x| u.iter().all(|&a| hom_orbit(a, x) == 0) == u.contains(&x));
        ct += usize::from(closed);
    }
    (silt, ct)
}

fn main() -> ExitCode {
    let opts = VerifyOptions::default();
    let criteria: [(u32, &str, &str); 9] = [
        (1, "a2-classification", "A2 silting objects are the pairs j - i = 3r + 1"),
        (2, "d-silting-rows", "d-silting objects are the first d rows, d = 1, 2, 3"),
        (3, "mutations-bound", "at most n + 1 completions in [A[n], A], strict A2 instance"),
        (4, "braid-image", "A2 section braids are (b2 b1)^i and b1 (b2 b1)^i"),
        (5, "braid-well-defined", "every section gets one braid normal form"),
        (6, "orbit-counts", "C_d(k) and folded A2 counts, d = 1, 3, 5"),
        (7, "amiot-bijection", "fundamental-domain silting objects biject with cluster-tilting objects"),
        (8, "mutation-projection", "Hasse covers project to cluster-tilting exchanges"),
        (9, "invariants", "Serre duality, Euler form, CY symmetry, mutation involution"),
    ];
    let mut all = true;
    for (n, suite, what) in criteria {
        let mut ok = match run_suite(suite, &opts) {
            Ok(r) => {
                for c in r.claims.iter().filter(|c| c.status != siltlab::verify::Status::Pass) {
                    println!("      failing claim {}: {}", c.id, c.witness);
                }
                r.passed()
            }
            Err(e) => {
                println!("      suite {suite} errored: {e}");
                false
            }
        };
        if n == 7 {
            let counts = a2_d2_by_labels();
            if counts != (5, 5) {
                println!("      label oracle for A2, d = 2 gave {counts:?}, expected (5, 5)");
                ok = false;
            }
        }
        all &= ok;
        println!("{}  criterion {n}  {suite}  {what}", if ok { "PASS" } else { "FAIL" });
    }
    println!("SKIP  criterion 10  out of scope: liftability classifications and dg-level statements");
    if all {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failures above");
        ExitCode::FAILURE
    }
}
