//! The named verification suites behind the CLI: `fourier`, `weil`,
//! `minimal-type`, `hecke`, and `finite-indices`. Each suite runs a fixed
//! list of exact checks and returns a [`Report`]; reports are deterministic
//! for a fixed configuration and seed.

use crate::batch;
use crate::chevalley::{self, GroupWord, Letter, Relation, Root};
use crate::cyclotomic::{kernel_basis, rat, ratio, CycMatrix, Cyclotomic, Rat};
use crate::dyadic::{pow_rat, AdditiveCharacter};
use crate::finite::{self, GroupKind};
use crate::hecke::{verify_typeb_relations, HeckeAlgebra};
use crate::matrix::RatMatrix;
use crate::report::{Check, ConfigEcho, Report};
use crate::schwartz::{random_function, CharacterData, SchwartzFunction};
use crate::weil::{
    compile_word, intertwining_check, metaplectic_defect, stabilizes_line, truncation_basis,
    Generator, HeisenbergElement, WeilOperator,
};
use crate::weyl::{enumerate_up_to_length, reduced_word, simple_reflection, AffineWeylElement};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::HashMap;

#[derive(Debug, thiserror::Error)]
pub enum SuiteError {
    #[error("truncated space of dimension {0} exceeds the budget of 4096")]
    TruncationBudget(u64),
}

/// Shared configuration of the verification suites.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Rank of the symplectic group.
    pub n: usize,
    /// Truncation depth of the fixed-space computation.
    pub trunc: i64,
    /// Maximum word length for Hecke enumeration checks.
    pub max_len: usize,
    /// Seed of the deterministic sample generator.
    pub seed: u64,
    /// Inject a deliberately failing check into the transform suite, to
    /// exercise the failure path end to end.
    pub self_test: bool,
}

impl SuiteConfig {
    pub fn new(n: usize) -> Self {
        SuiteConfig {
            n,
            trunc: default_truncation(n),
            max_len: 6,
            seed: 0,
            self_test: false,
        }
    }

    fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            n: self.n,
            trunc: self.trunc,
            max_len: self.max_len,
            seed: self.seed,
        }
    }

    fn rng(&self, stream: u64) -> StdRng {
        StdRng::seed_from_u64(self.seed.wrapping_mul(0x9e3779b97f4a7c15) ^ stream)
    }
}

/// Smallest truncation depth on which the support arguments are faithful.
pub fn default_truncation(n: usize) -> i64 {
    if n == 1 {
        2
    } else {
        1
    }
}

fn standard_psi() -> CharacterData {
    CharacterData::standard(2)
}

fn lattice_indicator(n: usize) -> SchwartzFunction {
    SchwartzFunction::phi_lattice(0, 2, n)
}

// ---------------------------------------------------------------------------
// fourier
// ---------------------------------------------------------------------------

/// Transform identities: the lattice-indicator formula, inversion, the
/// support/constancy law, the tensor law, and norm preservation.
pub fn suite_fourier(cfg: &SuiteConfig) -> Report {
    let mut checks = Vec::new();

    // hat(phi_m) = 2^-m phi_{-m} for the conductor-1 dyadic character
    let cd2 = standard_psi();
    let mut formula_ok = true;
    for m in -2..=2i64 {
        let lhs = SchwartzFunction::phi_lattice(m, 2, 1).fourier_full(&cd2);
        let rhs = SchwartzFunction::phi_lattice(-m, 2, 1)
            .scale(&Cyclotomic::from_rat(pow_rat(2, -m)));
        if lhs != rhs {
            formula_ok = false;
        }
    }
    checks.push(Check::new(
        "lattice-transform-formula",
        formula_ok,
        "hat(phi_m) = 2^-m phi_(-m)",
        "m in -2..=2, p = 2, c = 1",
    ));

    // odd p with the self-dual character: phi_0 is its own transform
    let cd3 = CharacterData::standard(3);
    let phi0_3 = SchwartzFunction::phi_lattice(0, 3, 1);
    checks.push(Check::new(
        "self-dual-fixed-point",
        phi0_3.fourier_full(&cd3) == phi0_3,
        "hat(phi_0) = phi_0 at c = delta",
        "p = 3, vol(Z_3) = 1",
    ));

    // inversion on random functions over both primes and both conductors
    let mut inversion_ok = true;
    let mut law_ok = true;
    let mut tensor_ok = true;
    let mut count = 0usize;
    for p in [2u32, 3] {
        let delta = if p == 2 { 1i64 } else { 0 };
        for extra in [0i64, 1] {
            let cd = CharacterData::new(AdditiveCharacter::new(p, pow_rat(p, -(delta + extra))));
            let mut rng = cfg.rng(1000 + p as u64 * 10 + extra as u64);
            let functions: Vec<SchwartzFunction> =
                (0..25).map(|_| random_function(&mut rng, p, 1)).collect();
            let results = batch::map(&functions, |f| {
                let once = f.fourier_partial(0, &cd);
                let twice = once.fourier_partial(0, &cd);
                let inv_ok = twice == f.reflect();
                let law = f.is_zero()
                    || once.is_zero()
                    || (once.support_exp() >= -f.constancy_exp() + cd.shift()
                        && once.constancy_exp() <= -f.support_exp() + cd.shift());
                (inv_ok, law)
            });
            for (inv, law) in results {
                count += 1;
                inversion_ok &= inv;
                law_ok &= law;
            }
        }
    }
    checks.push(Check::new(
        "inversion",
        inversion_ok,
        "hat(hat(f))(y) = f(-y)",
        format!("{count} random functions, p in {{2, 3}}, c in {{delta, delta + 1}}"),
    ));
    checks.push(Check::new(
        "support-constancy-law",
        law_ok,
        "supp p^m, const p^N -> supp p^(-N + c - delta), const p^(-m + c - delta)",
        "checked structurally on every transform",
    ));

    // tensor compatibility at rank 2
    let mut rng = cfg.rng(2000);
    for _ in 0..8 {
        let f = random_function(&mut rng, 2, 1);
        let g = random_function(&mut rng, 2, 1);
        if f.tensor(&g).fourier_full(&cd2) != f.fourier_full(&cd2).tensor(&g.fourier_full(&cd2)) {
            tensor_ok = false;
        }
    }
    checks.push(Check::new(
        "tensor-compatibility",
        tensor_ok,
        "hat(f1 (x) f2) = hat(f1) (x) hat(f2)",
        "8 random pairs",
    ));

    // norm preservation at c = delta
    let mut mass_ok = true;
    for p in [2u32, 3] {
        let cd = CharacterData::standard(p);
        let mut rng = cfg.rng(3000 + p as u64);
        for _ in 0..10 {
            let f = random_function(&mut rng, p, 1);
            if f.mass(&cd) != f.fourier_full(&cd).mass(&cd) {
                mass_ok = false;
            }
        }
    }
    checks.push(Check::new(
        "norm-preservation",
        mass_ok,
        "sum vol |f|^2 = sum vol |hat(f)|^2 at c = delta",
        "10 random functions per prime",
    ));

    if cfg.self_test {
        // deliberately corrupt a transform and record the mismatch
        let corrupted = SchwartzFunction::phi_lattice(0, 2, 1)
            .fourier_full(&cd2)
            .add(&SchwartzFunction::phi_lattice(1, 2, 1));
        checks.push(Check::new(
            "self-test-corrupted-transform",
            corrupted == SchwartzFunction::phi_lattice(0, 2, 1),
            "hat(phi_0) = phi_0",
            "corruption injected on purpose; this check must fail",
        ));
    }

    Report::new("fourier", cfg.echo(), checks)
}

// ---------------------------------------------------------------------------
// weil
// ---------------------------------------------------------------------------

fn sample_rat(rng: &mut StdRng, pool: &[Rat]) -> Rat {
    pool[rng.random_range(0..pool.len())].clone()
}

fn random_heisenberg(rng: &mut StdRng, n: usize) -> HeisenbergElement {
    let pool = [rat(0), rat(1), rat(-1), rat(2), ratio(1, 2), ratio(-3, 2)];
    HeisenbergElement::new(
        (0..n).map(|_| sample_rat(rng, &pool)).collect(),
        (0..n).map(|_| sample_rat(rng, &pool)).collect(),
        sample_rat(rng, &pool),
    )
}

fn random_symmetric(rng: &mut StdRng, n: usize) -> RatMatrix {
    let pool = [rat(0), rat(1), rat(-1), rat(2), ratio(1, 2)];
    let mut b = RatMatrix::zero(n, n);
    for i in 0..n {
        for j in i..n {
            let v = sample_rat(rng, &pool);
            b[(i, j)] = v.clone();
            b[(j, i)] = v;
        }
    }
    b
}

fn random_invertible(rng: &mut StdRng, n: usize) -> RatMatrix {
    let pool = [rat(0), rat(1), rat(-1), rat(2), ratio(1, 2), rat(3)];
    loop {
        let mut b = RatMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                b[(i, j)] = sample_rat(rng, &pool);
            }
        }
        if b.inverse().is_some() {
            return b;
        }
    }
}

/// Intertwining of the generator operators, the Steinberg relations at the
/// matrix level, and the torus-relation defect of the cover.
pub fn suite_weil(cfg: &SuiteConfig) -> Report {
    let mut checks = Vec::new();
    let cd = standard_psi();

    // intertwining for the three generator families, both ranks
    for n in [1usize, 2] {
        let mut rng = cfg.rng(4000 + n as u64);
        let samples: Vec<(Generator, HeisenbergElement, SchwartzFunction)> = (0..150)
            .map(|k| {
                let h = random_heisenberg(&mut rng, n);
                let f = random_function(&mut rng, 2, n);
                let g = match k % 3 {
                    0 => Generator::UpperUnipotent(random_symmetric(&mut rng, n)),
                    1 => Generator::Levi(random_invertible(&mut rng, n)),
                    _ => Generator::Fourier,
                };
                (g, h, f)
            })
            .collect();
        let results = batch::map(&samples, |(g, h, f)| intertwining_check(g, h, f, &cd));
        checks.push(Check::new(
            format!("intertwining-rank-{n}"),
            results.iter().all(|&ok| ok),
            "T(g) rho(h) = rho(g h) T(g)",
            format!("50 samples per family (x(b), h(b), w), n = {n}"),
        ));
    }

    // Steinberg relations at the matrix level
    let mut rng = cfg.rng(5000);
    let scalars = [rat(1), rat(-1), rat(2), ratio(1, 2), rat(3), ratio(-3, 2)];
    let mut instances: Vec<(Relation, Root, Option<Root>, Rat, Rat, usize)> = Vec::new();
    for n in 1..=3usize {
        let roots = Root::all(n);
        for _ in 0..70 {
            let a = roots[rng.random_range(0..roots.len())];
            let t = sample_rat(&mut rng, &scalars);
            let u = sample_rat(&mut rng, &scalars);
            for rel in [Relation::R1, Relation::R3, Relation::R4, Relation::R5] {
                instances.push((rel, a, None, t.clone(), u.clone(), n));
            }
            let b = roots[rng.random_range(0..roots.len())];
            if b != a.negate() {
                instances.push((Relation::R2, a, Some(b), t, u, n));
            }
        }
    }
    let total = instances.len();
    let results = batch::map(&instances, |(rel, a, b, t, u, n)| {
        chevalley::steinberg_check(*rel, *a, *b, t, u, *n)
    });
    checks.push(Check::new(
        "steinberg-matrix-relations",
        results.iter().all(|&ok| ok),
        "R1-R5 hold in Sp_2n(Q)",
        format!("{total} sampled instances, n <= 3"),
    ));

    // operator-level additivity in the root parameter
    let mut r1_ok = true;
    for root in Root::all(1) {
        let word = |t: Rat| vec![Letter { root, t }];
        let lhs = compile_word(&word(rat(1)), 1, &cd).compose(&compile_word(&word(rat(2)), 1, &cd));
        let rhs = compile_word(&word(rat(3)), 1, &cd);
        if !crate::weil::equal_on_truncation(&lhs, &rhs, 2) {
            r1_ok = false;
        }
    }
    checks.push(Check::new(
        "operator-parameter-additivity",
        r1_ok,
        "T(x_a(t)) T(x_a(u)) = T(x_a(t + u))",
        "all roots of rank 1, truncation depth 2",
    ));

    // torus relation: exact for matrices, defective for operators
    let long = Root::Long { i: 1, neg: false };
    let grid = [rat(-1), rat(2), rat(-2), rat(3), ratio(1, 2)];
    let mut matrix_ok = true;
    for t in &grid {
        for u in &grid {
            if !chevalley::steinberg_check(Relation::R5, long, None, t, u, 1) {
                matrix_ok = false;
            }
        }
    }
    let mut memo: HashMap<(Rat, Rat), Cyclotomic> = HashMap::new();
    let mut defect = |a: &Rat, b: &Rat| -> Cyclotomic {
        memo.entry((a.clone(), b.clone()))
            .or_insert_with(|| {
                metaplectic_defect(a, b, long, 1, &cd, 1).expect("operators stay proportional")
            })
            .clone()
    };
    let mut nontrivial = Vec::new();
    for t in &grid {
        for u in &grid {
            let d = defect(t, u);
            if !d.is_one() {
                nontrivial.push(format!("d({t}, {u}) = {d}"));
            }
        }
    }
    let mut cocycle_ok = true;
    let small = [rat(-1), rat(2), ratio(1, 2)];
    for t in &small {
        for u in &small {
            for v in &small {
                let lhs = defect(t, u).mul(&defect(&(t * u), v));
                let rhs = defect(t, &(u * v)).mul(&defect(u, v));
                if lhs != rhs {
                    cocycle_ok = false;
                }
            }
        }
    }
    checks.push(Check::new(
        "torus-relation-matrix-level",
        matrix_ok,
        "h_a(t) h_a(u) = h_a(tu) in Sp_2n(Q)",
        "5 x 5 grid",
    ));
    checks.push(Check::new(
        "torus-relation-operator-defect",
        !nontrivial.is_empty(),
        "h_a(t) h_a(u) = h_a(tu) fails in the cover",
        format!(
            "{} nontrivial defects, e.g. {}",
            nontrivial.len(),
            nontrivial.first().cloned().unwrap_or_default()
        ),
    ));
    checks.push(Check::new(
        "defect-cocycle-identity",
        cocycle_ok,
        "d(t,u) d(tu,v) = d(t,uv) d(u,v)",
        "3 x 3 x 3 grid",
    ));

    Report::new("weil", cfg.echo(), checks)
}

// ---------------------------------------------------------------------------
// minimal-type
// ---------------------------------------------------------------------------

fn single_letter_word(root: Root, t: Rat) -> GroupWord {
    vec![Letter { root, t }]
}

/// Stabilizer table, character values, the one-dimensional fixed space, and
/// the support obstruction scalar, at the configured rank and truncation.
pub fn suite_minimal_type(cfg: &SuiteConfig) -> Result<Report, SuiteError> {
    let n = cfg.n;
    let depth = cfg.trunc;
    let dim = 4u64
        .checked_pow((depth * n as i64) as u32)
        .filter(|&d| d <= 4096)
        .ok_or(SuiteError::TruncationBudget(u64::MAX))?;
    let cd = standard_psi();
    let f = lattice_indicator(n);
    let mut checks = Vec::new();

    // (a) stabilizer table over all roots and levels
    let mut table_ok = true;
    let mut mismatches = Vec::new();
    let cases: Vec<(Root, i64)> = Root::all(n)
        .into_iter()
        .flat_map(|root| (-1..=2i64).map(move |m| (root, m)))
        .collect();
    let results = batch::map(&cases, |(root, m)| {
        let word = single_letter_word(*root, pow_rat(2, *m));
        let stab = stabilizes_line(&compile_word(&word, n, &cd), &f).is_some();
        let expected = if root.is_long() { *m >= 1 } else { *m >= 0 };
        (format!("x_{root}(2^{m})"), stab == expected)
    });
    for (name, ok) in results {
        if !ok {
            table_ok = false;
            mismatches.push(name);
        }
    }
    // torus elements stabilize exactly for unit parameters
    let torus_cases: Vec<(Root, Rat, bool)> = Root::all(n)
        .into_iter()
        .filter(|r| r.is_positive())
        .flat_map(|root| {
            [
                (rat(1), true),
                (rat(3), true),
                (rat(5), true),
                (rat(7), true),
                (rat(2), false),
                (rat(4), false),
                (rat(6), false),
                (ratio(1, 2), false),
            ]
            .into_iter()
            .map(move |(t, expect)| (root, t, expect))
        })
        .collect();
    let torus_results = batch::map(&torus_cases, |(root, t, expect)| {
        let op = compile_word(&chevalley::h_word(*root, t), n, &cd);
        let stab = stabilizes_line(&op, &f).is_some();
        (format!("h_{root}({t})"), stab == *expect)
    });
    for (name, ok) in torus_results {
        if !ok {
            table_ok = false;
            mismatches.push(name);
        }
    }
    // Weyl representatives always stabilize
    for root in Root::all(n).into_iter().filter(|r| r.is_positive()) {
        let op = compile_word(&chevalley::w_word(root, &rat(1)), n, &cd);
        if stabilizes_line(&op, &f).is_none() {
            table_ok = false;
            mismatches.push(format!("w_{root}(1)"));
        }
    }
    checks.push(Check::new(
        "stabilizer-table",
        table_ok,
        "x_(a+m) stabilizes C f iff m >= 1 (long) / m >= 0 (short); h_a(t) iff t is a unit",
        if mismatches.is_empty() {
            format!("all roots, m in -1..=2, torus reps mod 8, rank {n}")
        } else {
            format!("mismatches: {}", mismatches.join(", "))
        },
    ));

    // (b) character values psi(-t/4)
    let long1 = Root::Long { i: 1, neg: false };
    let mut chi_ok = true;
    let mut chi_details = Vec::new();
    for t in [rat(2), rat(4), rat(6), rat(-2)] {
        let word = vec![
            Letter {
                root: long1,
                t: rat(1),
            },
            Letter {
                root: long1.negate(),
                t: t.clone(),
            },
            Letter {
                root: long1,
                t: rat(-1),
            },
        ];
        let got = stabilizes_line(&compile_word(&word, n, &cd), &f);
        let expect = cd.psi().eval(&(-&t / rat(4)));
        let ok = got.as_ref() == Some(&expect);
        chi_ok &= ok;
        chi_details.push(format!("t = {t}: {}", got.map_or("none".into(), |c| c.to_string())));
    }
    checks.push(Check::new(
        "character-values",
        chi_ok,
        "chi(x_a(1) x_(-a)(t) x_a(-1)) = psi(-t/4) for t in 2 Z_2",
        chi_details.join("; "),
    ));

    // (d) the support obstruction scalar is a primitive 4th root of unity
    let word = vec![
        Letter {
            root: long1,
            t: rat(1),
        },
        Letter {
            root: long1.negate(),
            t: rat(2),
        },
        Letter {
            root: long1,
            t: rat(-1),
        },
    ];
    let obstruction = stabilizes_line(&compile_word(&word, n, &cd), &f);
    let obstruction_ok = obstruction.as_ref().is_some_and(|c| {
        c == &cd.psi().eval(&ratio(-1, 2)) && c.mul(c) == Cyclotomic::from_int(-1)
    });
    checks.push(Check::new(
        "support-obstruction",
        obstruction_ok,
        "psi(-1/2) is a primitive 4th root of unity",
        format!(
            "chi(x_a(1) x_(-a)(2) x_a(-1)) = {}",
            obstruction.map_or("none".into(), |c| c.to_string())
        ),
    ));

    // (c) fixed space of the proof-minimal generator set on the truncation
    let basis = truncation_basis(2, n, depth);
    debug_assert_eq!(basis.len() as u64, dim);
    let mut generators: Vec<WeilOperator> = Vec::new();
    for i in 1..=n {
        for neg in [false, true] {
            let word = single_letter_word(Root::Long { i, neg }, rat(2));
            generators.push(compile_word(&word, n, &cd));
        }
    }
    let dim_u = basis.len();
    let mut stacked_rows: Vec<Vec<Cyclotomic>> = Vec::new();
    let mut in_box = true;
    for op in &generators {
        let columns = batch::map(&basis, |e| {
            let img = op.apply(e);
            (
                img.support_exp() >= -depth && img.constancy_exp() <= depth,
                basis
                    .iter()
                    .map(|probe| {
                        let (rep, _) = probe.cells().next().expect("indicator cell");
                        img.eval(rep)
                    })
                    .collect::<Vec<Cyclotomic>>(),
            )
        });
        // assemble M - I row-wise from the column images
        for r in 0..dim_u {
            let mut row = Vec::with_capacity(dim_u);
            for (c, (ok, col)) in columns.iter().enumerate() {
                in_box &= ok;
                let mut entry = col[r].clone();
                if r == c {
                    entry = entry.sub(&Cyclotomic::one());
                }
                row.push(entry);
            }
            stacked_rows.push(row);
        }
    }
    let stacked = CycMatrix::new(stacked_rows.len(), dim_u, stacked_rows.concat());
    let kernel = kernel_basis(&stacked);
    let mut fixed_ok = in_box && kernel.len() == 1;
    let mut roundtrip_ok = true;
    if let [vector] = kernel.as_slice() {
        // the kernel vector must be proportional to the lattice indicator
        let f_coords: Vec<Cyclotomic> = basis
            .iter()
            .map(|probe| {
                let (rep, _) = probe.cells().next().expect("indicator cell");
                f.eval(rep)
            })
            .collect();
        let pivot = vector
            .iter()
            .position(|c| !c.is_zero())
            .expect("kernel vector is nonzero");
        if f_coords[pivot].is_zero() {
            fixed_ok = false;
        } else {
            let scale = vector[pivot].div(&f_coords[pivot]).expect("nonzero");
            for (a, b) in vector.iter().zip(f_coords.iter()) {
                if a != &b.mul(&scale) {
                    fixed_ok = false;
                }
            }
        }
        // round trip: the kernel vector is exactly fixed by every generator
        for op in &generators {
            let mut image = SchwartzFunction::zero(2, n);
            for (c, e) in basis.iter().enumerate() {
                if !vector[c].is_zero() {
                    image = image.add(&e.scale(&vector[c]));
                }
            }
            let applied = op.apply(&image);
            if applied != image {
                roundtrip_ok = false;
            }
        }
    }
    checks.push(Check::new(
        "fixed-space-dimension",
        fixed_ok,
        "V^(J, chi) = C phi_0^(x n)",
        format!(
            "2n = {} generators on a {}-dimensional truncation, kernel dimension {}",
            2 * n,
            dim_u,
            kernel.len()
        ),
    ));
    checks.push(Check::new(
        "fixed-space-round-trip",
        roundtrip_ok,
        "generator images fix the kernel vector exactly",
        "re-applied every generator to the kernel vector",
    ));

    Ok(Report::new("minimal-type", cfg.echo(), checks))
}

// ---------------------------------------------------------------------------
// hecke
// ---------------------------------------------------------------------------

/// Quadratic, braid, associativity, Matsumoto, Gram, star/trace, the type-B
/// presentation transport, and the eigenvalue cross-check against the finite
/// index computations.
pub fn suite_hecke(cfg: &SuiteConfig) -> Report {
    let n = cfg.n;
    let algebra = HeckeAlgebra::minimal_type(n);
    let mut checks = Vec::new();

    // quadratic relations
    let mut quad_ok = true;
    for i in 0..=n {
        let ti = algebra.t_basis(&simple_reflection(i, n));
        let sq = algebra.multiply(&ti, &ti);
        let lambda = algebra.params().lambda(i).clone();
        let expect = ti
            .scale(&Cyclotomic::from_rat(&lambda - rat(1)))
            .add(&algebra.unit().scale(&Cyclotomic::from_rat(lambda)));
        if sq != expect {
            quad_ok = false;
        }
    }
    checks.push(Check::new(
        "quadratic-relations",
        quad_ok,
        "T_n^2 = 1 and (T_i - 2)(T_i + 1) = 0 for i < n",
        format!("generators T_0..T_{n}"),
    ));

    // braid relations of the affine diagram
    let mut braid_ok = true;
    let mut braid_details = Vec::new();
    if n == 1 {
        // no braid relation: alternating products of equal length differ
        for m in 2..=5usize {
            let left: Vec<usize> = (0..m).map(|k| k % 2).collect();
            let right: Vec<usize> = (0..m).map(|k| (k + 1) % 2).collect();
            if algebra.word_product(&left) == algebra.word_product(&right) {
                braid_ok = false;
                braid_details.push(format!("length {m}"));
            }
        }
    } else {
        for i in 0..=n {
            for j in (i + 1)..=n {
                let m = crate::weyl::coxeter_order(i, j, n).expect("finite order");
                let left: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect();
                let right: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { j } else { i }).collect();
                if algebra.word_product(&left) != algebra.word_product(&right) {
                    braid_ok = false;
                    braid_details.push(format!("({i}, {j})"));
                }
            }
        }
    }
    checks.push(Check::new(
        "braid-relations",
        braid_ok,
        if n == 1 {
            "no braid relation between T_0 and T_1"
        } else {
            "braid relations of the affine C_n diagram"
        },
        if braid_details.is_empty() {
            "all pairs".to_string()
        } else {
            braid_details.join(", ")
        },
    ));

    // associativity on random basis triples
    let mut rng = cfg.rng(6000);
    let triples: Vec<(AffineWeylElement, AffineWeylElement, AffineWeylElement)> = (0..200)
        .map(|_| {
            let pick = |rng: &mut StdRng| {
                let mut w = AffineWeylElement::identity(n);
                for _ in 0..rng.random_range(0..=cfg.max_len) {
                    w = w.multiply(&simple_reflection(rng.random_range(0..=n), n));
                }
                w
            };
            (pick(&mut rng), pick(&mut rng), pick(&mut rng))
        })
        .collect();
    let assoc = batch::map(&triples, |(a, b, c)| {
        let ta = algebra.t_basis(a);
        let tb = algebra.t_basis(b);
        let tc = algebra.t_basis(c);
        algebra.multiply(&algebra.multiply(&ta, &tb), &tc)
            == algebra.multiply(&ta, &algebra.multiply(&tb, &tc))
    });
    checks.push(Check::new(
        "associativity",
        assoc.iter().all(|&ok| ok),
        "(T_a T_b) T_c = T_a (T_b T_c)",
        format!("{} random triples, lengths <= {}", triples.len(), cfg.max_len),
    ));

    // Matsumoto consistency and the two multiplication routes
    let mut rng = cfg.rng(6100);
    let mut matsumoto_ok = true;
    let mut routes_ok = true;
    for _ in 0..40 {
        let mut w = AffineWeylElement::identity(n);
        for _ in 0..rng.random_range(0..=cfg.max_len) {
            w = w.multiply(&simple_reflection(rng.random_range(0..=n), n));
        }
        let canonical = algebra.t_basis(&w);
        let alt = crate::weyl::reduced_word_randomized(&w, &mut rng);
        if algebra.t_from_reduced_word(&alt) != canonical {
            matsumoto_ok = false;
        }
        let mut v = AffineWeylElement::identity(n);
        for _ in 0..rng.random_range(0..=3) {
            v = v.multiply(&simple_reflection(rng.random_range(0..=n), n));
        }
        let tv = algebra.t_basis(&v);
        if algebra.multiply(&canonical, &tv) != algebra.multiply_via_right(&canonical, &tv) {
            routes_ok = false;
        }
    }
    checks.push(Check::new(
        "matsumoto-consistency",
        matsumoto_ok,
        "T_w is independent of the reduced word",
        "40 randomized reduced words",
    ));
    checks.push(Check::new(
        "multiplication-routes-agree",
        routes_ok,
        "left and right descent recursions give the same product",
        "40 random pairs",
    ));

    // Gram matrix of the T_w basis up to the configured length
    let gram_len = cfg.max_len.min(6);
    let elements: Vec<AffineWeylElement> = enumerate_up_to_length(gram_len, n)
        .into_iter()
        .flatten()
        .collect();
    let words: Vec<Vec<usize>> = elements.iter().map(reduced_word).collect();
    let pairs: Vec<(usize, usize)> = (0..elements.len())
        .flat_map(|i| (0..elements.len()).map(move |j| (i, j)))
        .collect();
    let gram = batch::map(&pairs, |(i, j)| {
        // tr(T_{v^-1} T_w) by folding v's word onto T_w
        let mut acc = algebra.t_basis(&elements[*j]);
        for &k in &words[*i] {
            acc = algebra.gen_mul_left(k, &acc);
        }
        let inner = algebra.trace(&acc);
        if i == j {
            inner.to_rat().is_some_and(|r| r > rat(0))
        } else {
            inner.is_zero()
        }
    });
    checks.push(Check::new(
        "gram-diagonal",
        gram.iter().all(|&ok| ok),
        "[T_v, T_w] = 0 for v != w; [T_w, T_w] positive rational",
        format!("{} elements of length <= {gram_len}", elements.len()),
    ));

    // star and trace structure
    let mut rng = cfg.rng(6200);
    let mut star_ok = true;
    for _ in 0..30 {
        let mut w = AffineWeylElement::identity(n);
        for _ in 0..rng.random_range(0..=4) {
            w = w.multiply(&simple_reflection(rng.random_range(0..=n), n));
        }
        let mut v = AffineWeylElement::identity(n);
        for _ in 0..rng.random_range(0..=4) {
            v = v.multiply(&simple_reflection(rng.random_range(0..=n), n));
        }
        let a = algebra.t_basis(&w);
        let b = algebra.t_basis(&v);
        if algebra.star(&algebra.multiply(&a, &b))
            != algebra.multiply(&algebra.star(&b), &algebra.star(&a))
        {
            star_ok = false;
        }
        if algebra.star(&a) != algebra.t_basis(&w.inverse()) {
            star_ok = false;
        }
    }
    checks.push(Check::new(
        "star-anti-automorphism",
        star_ok,
        "T_w* = T_(w^-1) and (ab)* = b* a*",
        "30 random pairs",
    ));

    // the type-B presentation transported through the generator map
    let mut rng = cfg.rng(6300);
    let relation_len = if n >= 3 { 4 } else { cfg.max_len.min(6) };
    for rc in verify_typeb_relations(&algebra, relation_len, 100, &mut rng) {
        checks.push(Check::new(
            format!("presentation-{}", rc.name.replace(' ', "-")),
            rc.ok,
            "tau -> T_n, t_i -> T_(n-i)",
            rc.details,
        ));
    }

    // eigenvalues from the finite index computations match the parameters
    let mut eig_ok = true;
    let mut eig_details = Vec::new();
    let lam0 = finite::dim_u0(n)
        .ok()
        .and_then(|d| finite::type_eigenvalue(d, 2).ok());
    eig_ok &= lam0.as_ref() == Some(algebra.params().lambda(0));
    eig_details.push(format!(
        "lambda_0 = (6 - 2)/2 = {}",
        lam0.map_or("?".into(), |r| r.to_string())
    ));
    if n >= 2 {
        for i in 1..n {
            let dim_u = finite::enumerate_group(GroupKind::OrthogonalParabolic(i), n)
                .and_then(|p| {
                    finite::index(&p, &finite::enumerate_group(GroupKind::OrthogonalBorel, n)?)
                })
                .ok();
            let lam = dim_u.and_then(|d| finite::type_eigenvalue(d, 1).ok());
            eig_ok &= lam.as_ref() == Some(algebra.params().lambda(i));
            eig_details.push(format!(
                "lambda_{i} = (3 - 1)/1 = {}",
                lam.map_or("?".into(), |r| r.to_string())
            ));
        }
    }
    let lam_n = finite::enumerate_group(GroupKind::Borel, 1)
        .and_then(|b| finite::index(&b, &finite::enumerate_group(GroupKind::OrthogonalBorel, 1)?))
        .ok()
        .and_then(|d| finite::type_eigenvalue(d, 1).ok());
    eig_ok &= lam_n.as_ref() == Some(algebra.params().lambda(n));
    eig_details.push(format!(
        "lambda_{n} = (2 - 1)/1 = {}",
        lam_n.map_or("?".into(), |r| r.to_string())
    ));
    checks.push(Check::new(
        "eigenvalue-cross-check",
        eig_ok,
        "(T_x - lambda)(T_x + 1) = 0 with lambda = (dim U - dim V)/dim V",
        eig_details.join("; "),
    ));

    Report::new("hecke", cfg.echo(), checks)
}

// ---------------------------------------------------------------------------
// finite-indices
// ---------------------------------------------------------------------------

/// Orders and indices of the finite groups over F_2, and the displayed
/// eigenvalue instances.
pub fn suite_finite_indices(cfg: &SuiteConfig) -> Report {
    let mut checks = Vec::new();

    let sl2 = finite::enumerate_group(GroupKind::Symplectic, 1).expect("rank 1");
    checks.push(Check::new(
        "sl2-order",
        sl2.order() == 6,
        "|SL_2(F_2)| = 6",
        format!("order {}", sl2.order()),
    ));
    let b2 = finite::enumerate_group(GroupKind::Borel, 1).expect("rank 1");
    let idx = finite::index(&sl2, &b2).expect("subgroup");
    checks.push(Check::new(
        "sl2-borel-index",
        idx == 3,
        "[SL_2(F_2) : B_2(F_2)] = 3",
        format!("index {idx}"),
    ));

    let mut iwahori_ok = true;
    let mut iwahori_details = Vec::new();
    for rank in 1..=3usize {
        let b = finite::enumerate_group(GroupKind::Borel, rank).expect("borel");
        let bp = finite::enumerate_group(GroupKind::OrthogonalBorel, rank).expect("borel");
        let idx = finite::index(&b, &bp).expect("subgroup");
        iwahori_ok &= idx == 1 << rank;
        iwahori_details.push(format!("n = {rank}: {idx}"));
    }
    checks.push(Check::new(
        "borel-index",
        iwahori_ok,
        "[B : B'] = 2^n",
        iwahori_details.join("; "),
    ));

    let p1 = finite::enumerate_group(GroupKind::OrthogonalParabolic(1), 2).expect("parabolic");
    let bp2 = finite::enumerate_group(GroupKind::OrthogonalBorel, 2).expect("borel");
    let idx = finite::index(&p1, &bp2).expect("subgroup");
    checks.push(Check::new(
        "parabolic-index",
        idx == 3,
        "[P'_i(F_2) : B'] = 3",
        format!("n = 2, i = 1: {idx}"),
    ));

    let mut u0_ok = true;
    let mut u0_details = Vec::new();
    for rank in 1..=3usize {
        let d = finite::dim_u0(rank).expect("within budget");
        u0_ok &= d == 6;
        u0_details.push(format!("n = {rank}: {d}"));
    }
    checks.push(Check::new(
        "dim-u0",
        u0_ok,
        "dim U_0 = (3 2^(1-n)) (2^n) = 6",
        u0_details.join("; "),
    ));

    // group orders against the closed formula, and the orthogonal embedding
    let cap = cfg.n.clamp(1, 3);
    let mut orders_ok = true;
    let mut orders_details = Vec::new();
    for rank in 1..=cap {
        let order = finite::enumerate_group(GroupKind::Symplectic, rank)
            .expect("within budget")
            .order();
        let mut expect = 1usize << (rank * rank);
        for i in 1..=rank {
            expect *= (1usize << (2 * i)) - 1;
        }
        orders_ok &= order == expect;
        orders_details.push(format!("n = {rank}: {order}"));
    }
    checks.push(Check::new(
        "symplectic-orders",
        orders_ok,
        "|Sp_2n(F_2)| = 2^(n^2) prod (4^i - 1)",
        orders_details.join("; "),
    ));

    let mut embed_ok = true;
    for rank in 1..=cap.min(2) {
        let o = finite::enumerate_group(GroupKind::Orthogonal, rank).expect("within budget");
        let sp = finite::enumerate_group(GroupKind::Symplectic, rank).expect("within budget");
        embed_ok &= o.is_subgroup_of(&sp);
    }
    checks.push(Check::new(
        "orthogonal-embedding",
        embed_ok,
        "O_2n(F_2) sits inside Sp_2n(F_2)",
        "elementwise containment",
    ));

    let mut eig_ok = true;
    for (u, v, expect) in [(2usize, 1usize, rat(1)), (3, 1, rat(2)), (6, 2, rat(2))] {
        if finite::type_eigenvalue(u, v).ok() != Some(expect.clone()) {
            eig_ok = false;
        }
    }
    checks.push(Check::new(
        "eigenvalue-instances",
        eig_ok,
        "lambda = (dim U - dim V)/dim V: (2,1) -> 1, (3,1) -> 2, (6,2) -> 2",
        "three displayed instances",
    ));

    Report::new("finite-indices", cfg.echo(), checks)
}

/// Run every suite with the configuration; minimal-type honors the
/// truncation budget.
pub fn run_all(cfg: &SuiteConfig) -> Result<Vec<Report>, SuiteError> {
    Ok(vec![
        suite_fourier(cfg),
        suite_weil(cfg),
        suite_minimal_type(cfg)?,
        suite_hecke(cfg),
        suite_finite_indices(cfg),
    ])
}
