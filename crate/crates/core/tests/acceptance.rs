//! One line per acceptance criterion. All checks are exact: a criterion
//! passes only when every underlying equality holds with zero tolerance.

use std::process::ExitCode;
use std::time::Instant;

use daha_wheel::verify::{macdonald, operators, rewrite, wheel, VerifyConfig};
use daha_wheel::wheel_ideal::{quotient_nk1_check, Report};
use daha_wheel::Result;

const POINTS: [(usize, usize, usize); 4] = [(2, 1, 2), (3, 1, 2), (3, 2, 2), (3, 1, 3)];

/// Pass/fail summary of the checks whose name satisfies `select`.
struct Tally {
    seen: usize,
    failed: Vec<String>,
}

impl Tally {
    fn new() -> Tally {
        Tally {
            seen: 0,
            failed: Vec::new(),
        }
    }

    fn add(&mut self, report: &Report, select: impl Fn(&str) -> bool) -> usize {
        let mut here = 0;
        for c in report.checks.iter().filter(|c| select(&c.name)) {
            here += 1;
            if !c.passed() {
                self.failed.push(format!(
                    "n={} k={:?} r={:?} {} {:?} {}",
                    report.params.n,
                    report.params.k,
                    report.params.r,
                    c.name,
                    c.lambda.as_deref().unwrap_or(&[]),
                    c.witness.as_deref().unwrap_or("")
                ));
            }
        }
        self.seen += here;
        here
    }

    fn ok(&self) -> bool {
        self.seen > 0 && self.failed.is_empty()
    }

    fn detail(&self) -> String {
        match self.failed.first() {
            None => format!("{} checks", self.seen),
            Some(f) => format!(
                "{} of {} checks failed, first: {f}",
                self.failed.len(),
                self.seen
            ),
        }
    }
}

fn cfg(n: usize, point: Option<(usize, usize)>, bound: i64, samples: usize) -> VerifyConfig {
    VerifyConfig {
        point,
        bound,
        samples,
        ..VerifyConfig::new(n)
    }
}

struct Runner {
    all_ok: bool,
}

impl Runner {
    fn criterion(&mut self, id: u32, label: &str, body: impl FnOnce() -> Result<(bool, String)>) {
        let start = Instant::now();
        let (ok, detail) = match body() {
            Ok(x) => x,
            Err(e) => (false, format!("error: {e}")),
        };
        self.all_ok &= ok;
        println!(
            "[{}] {id}. {label}: {detail} ({:.1}s)",
            if ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
    }
}

fn main() -> ExitCode {
    let mut run = Runner { all_ok: true };

    run.criterion(
        1,
        "operator relations, n = 2, 3, 20 random polynomials",
        || {
            let mut t = Tally::new();
            for n in [2, 3] {
                t.add(&operators(&cfg(n, None, 3, 20))?, |_| true);
            }
            Ok((t.ok(), t.detail()))
        },
    );

    // the generic construction feeds criteria 2 to 4
    let mut generic = Vec::new();
    let started = Instant::now();
    let built: Result<()> = (|| {
        for n in [1, 2, 3] {
            generic.push(macdonald(&cfg(n, None, 2, 50))?);
        }
        Ok(())
    })();
    println!(
        "      generic polynomials on [-2,2]^n, n <= 3: {:.1}s",
        started.elapsed().as_secs_f64()
    );

    run.criterion(
        2,
        "projection = intertwiners, eigen equations, monic triangular support",
        || {
            built.clone()?;
            let mut t = Tally::new();
            for r in generic.iter().filter(|r| r.params.n >= 2) {
                t.add(r, |name| {
                    matches!(
                        name,
                        "routes_agree" | "eigen_equations" | "monic_triangular"
                    )
                });
            }
            Ok((t.ok(), t.detail()))
        },
    );

    run.criterion(
        3,
        "duality on at least 50 random pairs, n = 3, box 2",
        || {
            built.clone()?;
            let mut t = Tally::new();
            let pairs = t.add(
                generic
                    .iter()
                    .find(|r| r.params.n == 3)
                    .expect("n = 3 report"),
                |n| n == "duality",
            );
            Ok((t.ok() && pairs >= 50, t.detail()))
        },
    );

    run.criterion(
        4,
        "factored u0 value equals direct evaluation, n <= 3, box 2",
        || {
            built.clone()?;
            let mut t = Tally::new();
            for r in &generic {
                t.add(r, |n| n == "u0_recursion");
            }
            Ok((t.ok(), t.detail()))
        },
    );

    // wheel reports at the four points, box 3
    let started = Instant::now();
    let wheels: Vec<Result<(Report, Report)>> = POINTS
        .iter()
        .map(|&(n, k, r)| {
            let c = cfg(n, Some((k, r)), 3, 20);
            Ok((wheel(&c)?, rewrite(&c)?))
        })
        .collect();
    println!(
        "      specialized bases at four points, box 3: {:.1}s",
        started.elapsed().as_secs_f64()
    );
    let wheels = || -> Result<Vec<&(Report, Report)>> {
        wheels
            .iter()
            .map(|w| w.as_ref().map_err(|e| e.clone()))
            .collect()
    };

    run.criterion(
        5,
        "zeta of u0 on B and on at least 5 scattered one-wheel weights per point",
        || {
            let mut t = Tally::new();
            let mut enough = true;
            for (w, _) in wheels()? {
                t.add(w, |n| n == "zeta_u0_on_B");
                enough &= t.add(w, |n| n == "zeta_u0_one_wheel") >= 5;
            }
            Ok((t.ok() && enough, t.detail()))
        },
    );

    run.criterion(
        6,
        "B basis pole-free, in the ideal, independent, size = quotient dimension",
        || {
            let mut t = Tally::new();
            for (w, rw) in wheels()? {
                t.add(w, |n| {
                    matches!(
                        n,
                        "pole_free"
                            | "wheel_vanishing"
                            | "independent"
                            | "rewrite_dimension"
                            | "ideal_dimension"
                    )
                });
                t.add(rw, |_| true);
            }
            Ok((t.ok(), t.detail()))
        },
    );

    let started = Instant::now();
    let two_wheels = wheel(&cfg(4, Some((1, 2)), 2, 20));
    println!(
        "      n = 4, k = 1, r = 2, box 2: {:.1}s",
        started.elapsed().as_secs_f64()
    );

    run.criterion(
        7,
        "generator invariance of each basis and of the I2 span at (4,1,2) box 2",
        || {
            let mut t = Tally::new();
            for (w, _) in wheels()? {
                t.add(w, |n| n == "invariance");
            }
            let w4 = two_wheels.as_ref().map_err(|e| e.clone())?;
            let spans = t.add(w4, |n| n == "invariance" || n == "invariance_I2");
            Ok((t.ok() && spans > 0, t.detail()))
        },
    );

    run.criterion(
        8,
        "swap lemma for every applicable pair, n = 3, box 3, (k,r) = (1,2)",
        || {
            let mut t = Tally::new();
            let w = &wheels()?[1].0;
            t.add(w, |n| n == "swap_wheel_count" || n == "swap_zeta_step");
            Ok((t.ok(), t.detail()))
        },
    );

    run.criterion(
        9,
        "n = k+1 quotient at (2,1,2), (2,1,3), (3,2,2), box 2",
        || {
            let mut t = Tally::new();
            for (n, k, r) in [(2, 1, 2), (2, 1, 3), (3, 2, 2)] {
                let p = daha_wheel::scalars::ParamSpec::new(n, k, r)?;
                t.add(&quotient_nk1_check(&p, 2)?, |_| true);
            }
            Ok((t.ok(), t.detail()))
        },
    );

    run.criterion(
        10,
        "I1 inside I2, constant 1 in I3 but not in I2, at (4,1,2) box 2",
        || {
            let mut t = Tally::new();
            let w4 = two_wheels.as_ref().map_err(|e| e.clone())?;
            let found = t.add(w4, |n| {
                matches!(
                    n,
                    "I1_inside_I2" | "span_I1_inside_I2" | "one_outside_I2" | "one_inside_I3"
                )
            });
            Ok((t.ok() && found == 4, t.detail()))
        },
    );

    if run.all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
