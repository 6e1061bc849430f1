//! Acceptance criteria, runnable from the `selftest` subcommand and from the
//! `acceptance` integration test.
//!
//! Every check is exact; random inputs come from fixed ChaCha seeds so the
//! suite is reproducible.

use std::fmt;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::brieskorn::{self, ExponentTriple};
use crate::cli;
use crate::enumerate::{self, SweepMode};
use crate::frames::{self, FrameClass, Residue};
use crate::graphfile::{self, GraphFile};
use crate::plumbing::{self, build_graph, PlumbingGraph};
use crate::todd::{self, ChernMonomial, ChernVector, ToddPolynomial};

/// Canonical graph files shipped with the crate.
pub const FIXTURES: &[(&str, &str)] = &[
    ("a2.graph", include_str!("../fixtures/a2.graph")),
    (
        "brieskorn_2_3_7.graph",
        include_str!("../fixtures/brieskorn_2_3_7.graph"),
    ),
    ("e8.graph", include_str!("../fixtures/e8.graph")),
    (
        "simple_elliptic.graph",
        include_str!("../fixtures/simple_elliptic.graph"),
    ),
    (
        "single_m3.graph",
        include_str!("../fixtures/single_m3.graph"),
    ),
    ("singular.graph", include_str!("../fixtures/singular.graph")),
    ("theta.graph", include_str!("../fixtures/theta.graph")),
];

const LOOP_FIXTURE: &str = include_str!("../fixtures/loop.graph.invalid");

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Option<Duration>,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict}\tC{}\t{}\t{}", self.id, self.name, self.detail)
    }
}

fn check(
    id: u8,
    name: &'static str,
    budget: Option<Duration>,
    body: impl FnOnce() -> Result<String, String>,
) -> CriterionResult {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if let Some(limit) = budget {
        if elapsed > limit {
            passed = false;
            detail = format!("{detail}; exceeded time budget {limit:?} ({elapsed:?})");
        }
    }
    CriterionResult {
        id,
        name,
        passed,
        detail,
        elapsed,
        budget,
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn run_all() -> Vec<CriterionResult> {
    vec![
        todd_fidelity(),
        genus_normalization(),
        flagship_cross_check(),
        signature_reconciliation(),
        named_values(),
        torsor_suite(),
        diagram_suite(),
        e_r_route_agreement(),
        plumbing_robustness(),
        enumeration(),
        interface(),
    ]
}

type DisplayedTerm = (Vec<u32>, BigRational);

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Pairwise-coprime triples `2 ≤ a < b < c ≤ 25`.
pub fn coprime_sweep() -> Vec<ExponentTriple> {
    let mut out = Vec::new();
    for a in 2..=25 {
        for b in a + 1..=25 {
            for c in b + 1..=25 {
                let t = ExponentTriple::new(a, b, c).expect("exponents ≥ 2");
                if t.pairwise_coprime() {
                    out.push(t);
                }
            }
        }
    }
    out
}

pub fn todd_fidelity() -> CriterionResult {
    check(1, "todd-fidelity", Some(Duration::from_secs(1)), || {
        let displayed: [(usize, Vec<DisplayedTerm>); 4] = [
            (1, vec![(vec![1], rat(1, 2))]),
            (2, vec![(vec![0, 1], rat(1, 12)), (vec![2, 0], rat(1, 12))]),
            (3, vec![(vec![1, 1, 0], rat(1, 24))]),
            (
                4,
                vec![
                    (vec![0, 0, 0, 1], rat(-1, 720)),
                    (vec![1, 0, 1, 0], rat(1, 720)),
                    (vec![0, 2, 0, 0], rat(3, 720)),
                    (vec![2, 1, 0, 0], rat(4, 720)),
                    (vec![4, 0, 0, 0], rat(-1, 720)),
                ],
            ),
        ];
        for (k, terms) in displayed {
            let expected = ToddPolynomial::from_terms(
                k,
                terms.into_iter().map(|(e, c)| (ChernMonomial::new(e), c)),
            );
            let got = todd::todd_polynomial(k).map_err(|e| e.to_string())?;
            ensure(got == expected, || {
                format!("T{k} = {got}, expected {expected}")
            })?;
        }
        Ok("T1..T4 match coefficient for coefficient".into())
    })
}

pub fn genus_normalization() -> CriterionResult {
    check(
        2,
        "genus-normalization",
        Some(Duration::from_secs(1)),
        || {
            for n in 1..=6 {
                let t = todd::todd_polynomial(n).map_err(|e| e.to_string())?;
                let v = todd::evaluate_genus(&t, &ChernVector::projective_space(n))
                    .map_err(|e| e.to_string())?;
                ensure(v.is_one(), || format!("Td(CP^{n}) = {v}"))?;
            }
            Ok("Td(CP^n) = 1 for n = 1..6".into())
        },
    )
}

pub fn flagship_cross_check() -> CriterionResult {
    check(
        3,
        "flagship-laufer-sweep",
        Some(Duration::from_secs(30)),
        || {
            let sweep = coprime_sweep();
            for t in &sweep {
                let g = brieskorn::seifert_graph(t).map_err(|e| format!("{t:?}: {e}"))?;
                let m = plumbing::intersection_matrix(&g);
                ensure(plumbing::is_negative_definite(&m), || {
                    format!("{t:?}: not negative definite")
                })?;
                let det = plumbing::determinant(&m);
                ensure(det.abs().is_one(), || format!("{t:?}: det = {det}"))?;
                let k = plumbing::canonical_cycle(&g).map_err(|e| format!("{t:?}: {e}"))?;
                ensure(k.integral, || {
                    format!("{t:?}: canonical cycle not integral")
                })?;
                let p = brieskorn::profile(t);
                let chi = plumbing::laufer_chi(&g, p.p_g).map_err(|e| format!("{t:?}: {e}"))?;
                ensure(chi == p.mu as i64 + 1 && chi == p.ehat, || {
                    format!(
                        "{t:?}: laufer χ = {chi}, μ + 1 = {}, Ê = {}",
                        p.mu + 1,
                        p.ehat
                    )
                })?;
            }
            Ok(format!(
                "{} triples: negative definite, |det| = 1, K integral, χ = μ + 1 = Ê",
                sweep.len()
            ))
        },
    )
}

pub fn signature_reconciliation() -> CriterionResult {
    check(4, "signature-reconciliation", None, || {
        let sweep = coprime_sweep();
        for t in &sweep {
            let sigma = brieskorn::signature(t);
            let pg = brieskorn::geometric_genus(t) as i64;
            let mu = brieskorn::milnor_number(t) as i64;
            ensure(sigma == 4 * pg - mu, || {
                format!("{t:?}: σ = {sigma}, 4p_g - μ = {}", 4 * pg - mu)
            })?;
            ensure(sigma % 8 == 0, || {
                format!("{t:?}: σ = {sigma} not divisible by 8")
            })?;
        }
        Ok(format!("{} triples: σ = 4p_g - μ and 8 | σ", sweep.len()))
    })
}

pub fn named_values() -> CriterionResult {
    check(5, "named-values", None, || {
        let p = brieskorn::profile(&ExponentTriple::new(2, 3, 5).unwrap());
        let got = (
            p.mu,
            p.p_g,
            p.sigma,
            p.ehat,
            p.e_r.value(),
            p.e_c.value(),
            p.rochlin.value(),
            p.casson,
        );
        ensure(got == (8, 0, -8, 9, 9, 9, 8, Some(-1)), || {
            format!("profile(2,3,5) = {got:?}")
        })?;
        let c = brieskorn::profile(&ExponentTriple::new(2, 3, 11).unwrap()).casson;
        ensure(c == Some(-2), || format!("casson(2,3,11) = {c:?}"))?;
        Ok("profile(2,3,5) and casson(2,3,11) as expected".into())
    })
}

pub fn torsor_suite() -> CriterionResult {
    check(6, "torsor-axioms", None, || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
        let cases = 10_000;
        for _ in 0..cases {
            let label = if rng.gen_bool(0.5) {
                "L(2,3,5)"
            } else {
                "L(2,3,7)"
            };
            let base = if rng.gen_bool(0.5) {
                FrameClass::milnor_base(label)
            } else {
                FrameClass::abstract_frame(label, 0)
            };
            let f = frames::act(&base, rng.gen_range(-1_000_000..=1_000_000));
            let g = frames::act(&base, rng.gen_range(-1_000_000..=1_000_000));
            let h = frames::act(&base, rng.gen_range(-1_000_000..=1_000_000));
            let m: i64 = rng.gen_range(-100_000..=100_000);
            let n: i64 = rng.gen_range(-100_000..=100_000);
            let d = |a: &FrameClass, b: &FrameClass| frames::diff(a, b).map_err(|e| e.to_string());

            ensure(frames::act(&f, 0) == f, || "act(f, 0) ≠ f".into())?;
            ensure(
                frames::act(&frames::act(&f, m), n) == frames::act(&f, m + n),
                || format!("act(act(f,{m}),{n}) ≠ act(f,{})", m + n),
            )?;
            ensure(d(&frames::act(&f, n), &f)? == n, || {
                format!("diff(act(f,{n}), f) ≠ {n}")
            })?;
            ensure(d(&f, &g)? + d(&g, &h)? == d(&f, &h)?, || {
                "diff is not additive".into()
            })?;
            // unique n with act(g, n) = f: it is diff(f, g), and its neighbours fail
            let k = d(&f, &g)?;
            ensure(
                frames::act(&g, k) == f
                    && frames::act(&g, k + 1) != f
                    && frames::act(&g, k - 1) != f,
                || "transitivity/freeness fails".into(),
            )?;
        }
        Ok(format!("{cases} randomized cases, five axioms each"))
    })
}

pub fn diagram_suite() -> CriterionResult {
    check(7, "reduction-diagram", None, || {
        for e in -1000i64..=1000 {
            let b = frames::reduce(e);
            ensure(b.e_r.reduce::<12>() == b.e_c, || {
                format!("diagram fails at {e}")
            })?;
            ensure(b.e_c == Residue::<12>::new(e), || {
                format!("direct reduction fails at {e}")
            })?;
        }
        let mut preimages = [0u32; 12];
        for r in 0..24 {
            preimages[frames::Z24::new(r).reduce::<12>().value() as usize] += 1;
        }
        ensure(preimages.iter().all(|&c| c == 2), || {
            format!("preimage counts {preimages:?}")
        })?;
        Ok("ℤ → ℤ₂₄ → ℤ₁₂ commutes on [-1000, 1000]; ℤ₂₄ → ℤ₁₂ is 2-to-1".into())
    })
}

pub fn e_r_route_agreement() -> CriterionResult {
    check(8, "e_r-route-agreement", None, || {
        let sweep = coprime_sweep();
        for t in &sweep {
            let p = brieskorn::profile(t);
            let td = todd::todd_relative_surface(0, p.chi as i64);
            let via_td = frames::e_r_from_td_arf(&td, 0).map_err(|e| e.to_string())?;
            ensure(via_td == frames::reduce(p.ehat).e_r, || {
                format!("{t:?}: 12·Td route gives {via_td}, Ê mod 24 = {}", p.e_r)
            })?;
        }
        Ok(format!("{} profiles agree", sweep.len()))
    })
}

fn random_symmetric(rng: &mut ChaCha8Rng) -> plumbing::IntersectionMatrix {
    let n = rng.gen_range(1..=6);
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = rng.gen_range(-9..=9);
            m[i][j] = v;
            m[j][i] = v;
        }
    }
    plumbing::IntersectionMatrix::from_rows(m)
}

/// Connected random graph: random spanning tree plus up to `extra` edges.
pub fn random_graph(
    rng: &mut ChaCha8Rng,
    max_r: usize,
    weights: std::ops::RangeInclusive<i64>,
    max_genus: u32,
    extra: usize,
) -> PlumbingGraph {
    let r = rng.gen_range(1..=max_r);
    let mut edges: Vec<(usize, usize)> = (1..r).map(|i| (rng.gen_range(0..i), i)).collect();
    if r > 1 {
        for _ in 0..rng.gen_range(0..=extra) {
            let a = rng.gen_range(0..r);
            let b = rng.gen_range(0..r);
            if a != b {
                edges.push((a, b));
            }
        }
    }
    let mut ids: Vec<usize> = (0..r).collect();
    ids.shuffle(rng);
    let vertices: Vec<(usize, i64, u32)> = (0..r)
        .map(|i| {
            (
                i,
                rng.gen_range(weights.clone()),
                rng.gen_range(0..=max_genus),
            )
        })
        .collect();
    build_graph(
        vertices.into_iter().map(|(i, w, g)| (ids[i], w, g)),
        edges.into_iter().map(|(a, b)| (ids[a], ids[b])),
    )
    .expect("random graph is valid")
}

pub fn plumbing_robustness() -> CriterionResult {
    check(9, "plumbing-robustness", None, || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
        let mut definite = 0;
        for i in 0..1000 {
            let m = random_symmetric(&mut rng);
            let a = plumbing::is_negative_definite(&m);
            let b = plumbing::is_negative_definite_cholesky(&m);
            ensure(a == b, || {
                format!("matrix #{i} {:?}: minors {a}, cholesky {b}", m.rows())
            })?;
            definite += a as usize;
        }
        let mut solves = 0;
        for _ in 0..1000 {
            let g = random_graph(&mut rng, 6, -6..=-1, 2, 2);
            let Ok(k) = plumbing::canonical_cycle(&g) else {
                continue;
            };
            solves += 1;
            let m = plumbing::intersection_matrix(&g);
            let b = plumbing::adjunction_rhs(&g);
            for (row, bi) in m.rows().iter().zip(&b) {
                let lhs = row
                    .iter()
                    .zip(&k.coefficients)
                    .fold(BigRational::zero(), |acc, (&e, ki)| {
                        acc + ki * BigRational::from_integer(e.into())
                    });
                ensure(lhs == BigRational::from_integer(bi.clone()), || {
                    format!("nonzero adjunction residual on {g:?}")
                })?;
            }
        }
        Ok(format!(
            "1000 matrices agree ({definite} negative definite); {solves} solves with zero residual"
        ))
    })
}

pub fn enumeration() -> CriterionResult {
    check(10, "enumeration", None, || {
        let path2 = PlumbingGraph::chain(&[-2, -2]).unwrap();
        let rep = enumerate::sweep_weights(&path2, 3, SweepMode::Exhaustive)
            .map_err(|e| e.to_string())?;
        ensure(rep.fraction() == rat(8, 9) && rep.total == 9, || {
            format!("path r=2, N=3: {}/{}", rep.negative_definite, rep.total)
        })?;

        let single = build_graph([(0, -3, 0)], []).unwrap();
        let set = enumerate::gorenstein_genera(&single, 7).map_err(|e| e.to_string())?;
        ensure(
            set.solutions == vec![vec![1], vec![4], vec![7]]
                && set.lattice_period == BigInt::from(3),
            || {
                format!(
                    "single -3: {:?}, period {}",
                    set.solutions, set.lattice_period
                )
            },
        )?;

        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0010);
        let mut tested = 0;
        while tested < 100 {
            let g = random_graph(&mut rng, 4, -4..=-1, 0, 0);
            let det = plumbing::determinant(&plumbing::intersection_matrix(&g)).abs();
            if det.is_zero() || det > BigInt::from(6) {
                continue;
            }
            tested += 1;
            let period = det.to_u32().unwrap();
            let g_max = 2 * period;
            let set = enumerate::gorenstein_genera(&g, g_max).map_err(|e| e.to_string())?;
            let lookup: std::collections::HashSet<&Vec<u32>> = set.solutions.iter().collect();
            for sol in &set.solutions {
                for i in 0..sol.len() {
                    let mut shifted = sol.clone();
                    shifted[i] += period;
                    ensure(shifted[i] > g_max || lookup.contains(&shifted), || {
                        format!("coset closure fails for {sol:?} + {period}·e{i} on {g:?}")
                    })?;
                }
            }
        }
        Ok("8/9; {1,4,7} with period 3; coset closure on 100 random graphs".into())
    })
}

struct Scratch(PathBuf);

impl Scratch {
    fn new() -> Self {
        let nanos = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_nanos())
            .unwrap_or(0);
        let dir =
            std::env::temp_dir().join(format!("singlink-selftest-{}-{nanos}", std::process::id()));
        std::fs::create_dir_all(&dir).expect("scratch directory");
        Scratch(dir)
    }

    fn write(&self, name: &str, text: &str) -> String {
        let path = self.0.join(name);
        std::fs::write(&path, text).expect("scratch file");
        path.to_string_lossy().into_owned()
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

pub fn interface() -> CriterionResult {
    check(11, "interface", None, || {
        for (name, text) in FIXTURES {
            let parsed = graphfile::parse(text).map_err(|e| format!("{name}: {e}"))?;
            ensure(graphfile::emit(&parsed) == *text, || {
                format!("{name}: round trip differs")
            })?;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0011);
        for i in 0..100 {
            let graph = random_graph(&mut rng, 9, -9..=3, 3, 3);
            let file = GraphFile::new(Some(format!("random{i}")), graph);
            let text = graphfile::emit(&file);
            let back = graphfile::parse(&text).map_err(|e| format!("random {i}: {e}"))?;
            ensure(back == file && graphfile::emit(&back) == text, || {
                format!("random {i}: round trip differs")
            })?;
        }

        let scratch = Scratch::new();
        let e8 = scratch.write("e8.graph", FIXTURES[2].1);
        let looped = scratch.write("loop.graph", LOOP_FIXTURE);
        let singular = scratch.write("singular.graph", FIXTURES[5].1);
        let m3 = scratch.write("single_m3.graph", FIXTURES[4].1);
        let path8 = scratch.write(
            "path8.graph",
            &graphfile::emit(&GraphFile::new(
                None,
                PlumbingGraph::chain(&[-2; 8]).unwrap(),
            )),
        );
        let emitted = scratch
            .0
            .join("emitted.graph")
            .to_string_lossy()
            .into_owned();

        let cases: Vec<(Vec<&str>, i32, Option<&str>)> = vec![
            (vec!["todd", "--order", "2"], 0, Some("T2\t1/12*c1^2+1/12*c2\n")),
            (vec!["todd", "--order", "2", "--eval", "c1=0,c2=9"], 0, Some("T2\t1/12*c1^2+1/12*c2\nTd\t3/4\n")),
            (vec!["todd", "--order", "0"], 1, None),
            (vec!["todd", "--order", "9"], 1, None),
            (vec!["todd", "--order", "2", "--eval", "c3=1"], 1, None),
            (vec!["todd", "--bogus"], 1, None),
            (vec!["graph-check", &e8], 0, Some(
                "r\t8\nedges\t7\ndet\t1\nnegative_definite\ttrue\nnumerically_gorenstein\ttrue\nK\t0,0,0,0,0,0,0,0\nK2\t0\nchi_top\t9\n",
            )),
            (vec!["graph-check", &m3], 0, None),
            (vec!["graph-check", &looped], 1, None),
            (vec!["graph-check", "/nonexistent/singlink.graph"], 1, None),
            (vec!["graph-check", &singular], 2, None),
            (vec!["brieskorn", "2", "3", "5"], 0, Some(
                "mu\t8\npg\t0\nsigma\t-8\nchi\t9\nehat\t9\ne_r\t9\ne_c\t9\nrochlin\t8\ncasson\t-1\n",
            )),
            (vec!["brieskorn", "1", "3", "5"], 1, None),
            (vec!["brieskorn", "2", "3", "4", "--emit-graph", &emitted], 2, None),
            (vec!["brieskorn", "2", "3", "5", "--emit-graph", &emitted], 0, None),
            (vec!["ehat", "--mu", "8"], 0, Some("ehat\t9\ne_r\t9\ne_c\t9\n")),
            (vec!["ehat", "--mu", "8", "--offset", "-9"], 0, Some("ehat\t0\ne_r\t0\ne_c\t0\n")),
            (vec!["ehat", "--mu", "20"], 0, Some("ehat\t21\ne_r\t21\ne_c\t9\n")),
            (vec!["ehat"], 1, None),
            (vec!["enumerate", "genera", &m3, "--gmax", "7"], 0, None),
            (vec!["enumerate", "genera", &singular, "--gmax", "2"], 2, None),
            (vec!["enumerate", "weights", &path8, "--wmin", "-10"], 2, None),
            (vec!["enumerate", "weights", &path8, "--wmin", "-10", "--samples", "20", "--seed", "7"], 0, None),
            (vec!["enumerate", "weights", &e8, "--wmin", "0"], 1, None),
            (vec!["enumerate", "weights", &e8, "--wmin", "-2", "--seed", "1"], 1, None),
        ];
        for (args, code, stdout) in &cases {
            let out = cli::run(std::iter::once("singlink").chain(args.iter().copied()));
            ensure(out.code == *code, || {
                format!(
                    "`{}` exited {}, expected {code}: {}",
                    args.join(" "),
                    out.code,
                    out.stderr.trim()
                )
            })?;
            if let Some(expected) = stdout {
                ensure(out.stdout == *expected, || {
                    format!("`{}` printed {:?}", args.join(" "), out.stdout)
                })?;
            }
        }
        let emitted_text = std::fs::read_to_string(&emitted).map_err(|e| e.to_string())?;
        let emitted_graph = graphfile::parse(&emitted_text).map_err(|e| e.to_string())?;
        ensure(emitted_graph.graph == PlumbingGraph::e8(), || {
            "emitted (2,3,5) graph is not E8".into()
        })?;
        Ok(format!(
            "{} fixtures + 100 random graphs round-trip; {} CLI cases",
            FIXTURES.len(),
            cases.len()
        ))
    })
}
