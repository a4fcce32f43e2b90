//! Displayed characteristic polynomials of quotient matrices, checked
//! coefficient by coefficient against the exact characteristic polynomial
//! of the quotient built from the corresponding family.

use crate::enumeration::lemmas::LemmaGrid;
use crate::enumeration::report::LemmaReport;
use crate::families::{build, canonical_partition, join, k, pendant, union, FamilyId, FamilySpec};
use crate::spectral::{characteristic_polynomial, quotient_matrix, Polynomial};

fn desc(c: &[i128]) -> Polynomial {
    Polynomial::from_descending(c)
}

fn quotient_poly(spec: &FamilySpec) -> Result<Polynomial, String> {
    let g = build(spec).map_err(|e| e.to_string())?;
    let p = canonical_partition(spec).map_err(|e| e.to_string())?;
    let q = quotient_matrix(&g, &p).map_err(|e| e.to_string())?;
    q.characteristic_polynomial().map_err(|e| e.to_string())
}

struct Suite {
    report: LemmaReport,
}

impl Suite {
    fn check(&mut self, name: &str, params: String, spec: FamilySpec, displayed: Polynomial) {
        self.report.instances += 1;
        match quotient_poly(&spec) {
            Ok(actual) if actual == displayed => {}
            Ok(actual) => self.report.fail(format!(
                "{name} at {params}: quotient gives {actual}, displayed formula gives {displayed}"
            )),
            Err(e) => self.report.fail(format!("{name} at {params}: {e}")),
        }
    }

    fn check_matrix(&mut self, name: &str, params: String, m: Vec<Vec<i128>>, displayed: Polynomial) {
        self.report.instances += 1;
        match characteristic_polynomial(&m) {
            Ok(actual) if actual == displayed => {}
            Ok(actual) => self.report.fail(format!(
                "{name} at {params}: matrix gives {actual}, displayed formula gives {displayed}"
            )),
            Err(e) => self.report.fail(format!("{name} at {params}: {e}")),
        }
    }
}

/// Runs every displayed identity over the even orders of `grid`, with
/// `k <= 2` and the auxiliary parameters over their full valid ranges.
///
/// The degenerate five-block quotient for `K_1 v (K_2 ∪ K_{n-3})` (the
/// pendant-complete block of size two has no interior) is checked in two
/// ways: its formal matrix against the displayed quintic, and the displayed
/// quintic against `(x+1)^2` times the three-block quotient polynomial.
pub fn verify_charpoly_identities(grid: &LemmaGrid) -> LemmaReport {
    let mut s = Suite { report: LemmaReport::new("charpolys", grid.describe()) };
    let orders: Vec<i128> = (grid.n_min.max(4)..=grid.n_max).filter(|n| n % 2 == 0).map(|n| n as i128).collect();

    for &l in &orders {
        for q in (3..l - 2).step_by(2) {
            let p = desc(&[1, 4 - l, l * q - q * q - 3 * l + 5, 2 * l * q - 2 * q * q - 2 * l, l - 3]);
            let spec = FamilySpec::BridgedCompletes(q as usize, (l - q) as usize);
            s.check("bridged completes K_q+K_(l-q)", format!("l={l},q={q}"), spec, p);
        }
        if l >= 6 {
            let p = desc(&[1, 4 - l, -4, 4 * l - 18, l - 3]);
            s.check("bridged completes K_3+K_(l-3)", format!("l={l}"), FamilySpec::BridgedCompletes(3, (l - 3) as usize), p);
        }
    }

    for &n in &orders {
        for kk in 1..=2i128 {
            if n < 2 * kk + 2 {
                continue;
            }
            let p = desc(&[1, -(n - 3), -(2 * kk + n - 2), -4 * kk * kk + 2 * kk * n - 4 * kk]);
            let id = FamilyId::Thm11Exc1 { n: n as usize, k: kk as usize };
            s.check("K_2k v (K_(n-2k-1) u K_1)", format!("n={n},k={kk}"), FamilySpec::Named(id), p);

            for ss in 2 * kk..=(n + 2 * kk - 2) / 2 {
                if n - 2 * ss + 2 * kk - 1 < 1 {
                    continue;
                }
                let id = FamilyId::Thm11Extremal { n: n as usize, k: kk as usize, s: ss as usize };
                let p = desc(&[
                    1,
                    -(n - ss + 2 * kk - 3),
                    -(n - 2 * ss * kk + ss * ss + 2 * kk - 2),
                    -ss * (2 * kk - ss - 1) * (2 * kk + n - 2 * ss - 2),
                ]);
                s.check("K_s v (K_(n-2s+2k-1) u (s-2k+1)K_1)", format!("n={n},k={kk},s={ss}"), FamilySpec::Named(id), p);
                if ss == 2 * kk + 1 {
                    let p = desc(&[
                        1,
                        -(n - 4),
                        -(4 * kk - 1 + n),
                        -8 * kk * kk + 4 * kk * n - 20 * kk + 2 * n - 8,
                    ]);
                    s.check(
                        "K_(2k+1) v (K_(n-2k-3) u 2K_1)",
                        format!("n={n},k={kk}"),
                        FamilySpec::Named(id),
                        p,
                    );
                }
            }
        }
    }
    for kk in 1..=3i128 {
        let p = desc(&[1, -2 * kk, -6 * kk - 3]);
        s.check("K_(2k+1) v 3K_1", format!("k={kk}"), FamilySpec::Named(FamilyId::Thm11Exc2 { k: kk as usize }), p);
    }

    for &n in &orders {
        if n < 6 {
            continue;
        }
        for h in 3..=n - 2 {
            let spec = join(k(1), union(vec![pendant(h as usize), k((n - h - 1) as usize)]));
            let p = desc(&[
                1,
                -(n - 5),
                n * h - h * h - 4 * n + 8,
                3 * n * h - 3 * h * h - 4 * n - 2,
                6 * n - 3 * h - 19,
                -3 * h * n + 3 * h * h + 9 * n - 4 * h - 15,
            ]);
            s.check("K_1 v (K_(h-1)^+ u K_(n-h-1))", format!("n={n},h={h}"), spec, p);
        }

        let f3 = desc(&[1, 3 - n, -3, 3 * n - 11]);
        s.check("K_1 v (K_2 u K_(n-3))", format!("n={n}"), FamilySpec::Named(FamilyId::Thm13F3 { n: n as usize }), f3.clone());

        let qf3 = desc(&[1, -(n - 5), -(2 * n - 4), -(14 - 2 * n), -(25 - 6 * n), 3 * n - 11]);
        let formal = vec![
            vec![0, 0, 1, 1, n - 3],
            vec![1, -1, 1, 0, 0],
            vec![1, 0, 0, 1, 0],
            vec![1, 0, 1, 0, 0],
            vec![1, 0, 0, 0, n - 4],
        ];
        s.check_matrix("five-block quotient of K_1 v (K_1^+ u K_(n-3)), formal", format!("n={n}"), formal, qf3.clone());
        s.report.instances += 1;
        match desc(&[1, 2, 1]).checked_mul(&f3) {
            Ok(prod) if prod == qf3 => {}
            Ok(prod) => s.report.fail(format!(
                "five-block quotient of K_1 v (K_1^+ u K_(n-3)) at n={n}: (x+1)^2 times three-block quotient gives {prod}, displayed formula gives {qf3}"
            )),
            Err(e) => s.report.fail(e.to_string()),
        }

        s.check(
            "K_1 v (K_(n-3) u 2K_1)",
            format!("n={n}"),
            FamilySpec::Named(FamilyId::Lem210 { n: n as usize }),
            desc(&[1, -(n - 4), -(n - 1), 2 * (n - 4)]),
        );

        let sw = (n - 2) / 2;
        s.check(
            "K_s v (K_2 u sK_1), n=2s+2",
            format!("n={n},s={sw}"),
            FamilySpec::Named(FamilyId::W1 { n: n as usize }),
            desc(&[1, -sw, -(sw * sw + sw + 1), sw * sw]),
        );

        for ss in 2..=(n - 4) / 2 {
            let id = FamilyId::Thm13Fact3Split { n: n as usize, s: ss as usize };
            let p = desc(&[
                1,
                ss + 2 - n,
                -(ss * ss + ss + 1),
                ss * ss * n - 2 * ss * ss * ss + ss * n - 3 * ss * ss + n - 4 * ss - 2,
                -ss * ss * n + 2 * ss * ss * ss + ss * n - 2 * ss,
            ]);
            s.check("K_s v (K_2 u K_(n-2s-1) u (s-1)K_1)", format!("n={n},s={ss}"), FamilySpec::Named(id), p);

            let id = FamilyId::Thm13Fact3Pendant { n: n as usize, s: ss as usize };
            let p = desc(&[
                1,
                -(n - ss - 4),
                -(ss * ss + 2 * n - ss - 4),
                (ss + 1) * (n * ss - 2 * ss * ss - 3 * ss - 2),
                -(2 * ss * ss * ss - n * ss * ss + 3 * ss * ss - n * ss + 5 * ss - n + 3),
                -n * ss * ss + 2 * ss * ss * ss + 3 * ss * ss,
            ]);
            s.check("K_s v (K_(n-2s-1)^+ u sK_1)", format!("n={n},s={ss}"), FamilySpec::Named(id), p);
            if n == 2 * ss + 4 {
                let p = desc(&[1, -ss, -(ss * ss + 3 * ss + 4), ss * ss - ss - 2, 3 * ss * ss + ss + 1, -ss * ss]);
                s.check("K_s v (K_3^+ u sK_1), n=2s+4", format!("n={n},s={ss}"), FamilySpec::Named(id), p);
            }
        }

        if n >= 8 {
            let p = desc(&[1, -(n - 6), -(2 * n - 2), -(48 - 6 * n), -(41 - 7 * n), -4 * n + 28]);
            s.check("K_2 v (K_(n-5)^+ u 2K_1)", format!("n={n}"), FamilySpec::Named(FamilyId::W2 { n: n as usize }), p);
        }
    }
    s.report
}
