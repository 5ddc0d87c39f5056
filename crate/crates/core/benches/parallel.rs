//! Compares the data-parallel batch path against the sequential fallback on
//! the three heaviest inner loops: the transform inversion sweep, the
//! intertwining sweep, and the Hecke Gram matrix.
//!
//! `batch::map_par` is only compiled with the default `parallel` feature;
//! building the benches with `--no-default-features` measures the
//! sequential path alone.

use criterion::{criterion_group, criterion_main, Criterion};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use weilrep::batch;
use weilrep::cyclotomic::{rat, ratio};
use weilrep::matrix::RatMatrix;
use weilrep::schwartz::{random_function, CharacterData, SchwartzFunction};
use weilrep::weil::{intertwining_check, Generator, HeisenbergElement};
use weilrep::weyl::{enumerate_up_to_length, reduced_word, AffineWeylElement};

fn inversion_inputs() -> (CharacterData, Vec<SchwartzFunction>) {
    let cd = CharacterData::standard(2);
    let mut rng = StdRng::seed_from_u64(1);
    let fns = (0..48).map(|_| random_function(&mut rng, 2, 1)).collect();
    (cd, fns)
}

fn bench_inversion(c: &mut Criterion) {
    let (cd, fns) = inversion_inputs();
    let check = |f: &SchwartzFunction| f.fourier_full(&cd).fourier_full(&cd) == f.reflect();
    let mut group = c.benchmark_group("fourier_inversion_batch");
    group.sample_size(10);
    group.bench_function("seq", |b| {
        b.iter(|| batch::map_seq(&fns, check).iter().all(|&ok| ok))
    });
    #[cfg(feature = "parallel")]
    group.bench_function("par", |b| {
        b.iter(|| batch::map_par(&fns, check).iter().all(|&ok| ok))
    });
    group.finish();
}

fn intertwining_inputs() -> (
    CharacterData,
    Vec<(Generator, HeisenbergElement, SchwartzFunction)>,
) {
    let cd = CharacterData::standard(2);
    let n = 2usize;
    let mut rng = StdRng::seed_from_u64(2);
    let pool = [rat(0), rat(1), rat(-1), rat(2), ratio(1, 2)];
    let pick = |rng: &mut StdRng| pool[rng.random_range(0..pool.len())].clone();
    let samples = (0..24)
        .map(|k| {
            let h = HeisenbergElement::new(
                (0..n).map(|_| pick(&mut rng)).collect(),
                (0..n).map(|_| pick(&mut rng)).collect(),
                pick(&mut rng),
            );
            let f = random_function(&mut rng, 2, n);
            let g = match k % 3 {
                0 => {
                    let mut b = RatMatrix::zero(n, n);
                    for i in 0..n {
                        for j in i..n {
                            let v = pick(&mut rng);
                            b[(i, j)] = v.clone();
                            b[(j, i)] = v;
                        }
                    }
                    Generator::UpperUnipotent(b)
                }
                1 => Generator::Levi(RatMatrix::identity(n)),
                _ => Generator::Fourier,
            };
            (g, h, f)
        })
        .collect();
    (cd, samples)
}

fn bench_intertwining(c: &mut Criterion) {
    let (cd, samples) = intertwining_inputs();
    let check = |(g, h, f): &(Generator, HeisenbergElement, SchwartzFunction)| {
        intertwining_check(g, h, f, &cd)
    };
    let mut group = c.benchmark_group("intertwining_batch");
    group.sample_size(10);
    group.bench_function("seq", |b| {
        b.iter(|| batch::map_seq(&samples, check).iter().all(|&ok| ok))
    });
    #[cfg(feature = "parallel")]
    group.bench_function("par", |b| {
        b.iter(|| batch::map_par(&samples, check).iter().all(|&ok| ok))
    });
    group.finish();
}

type GramInputs = (
    weilrep::hecke::HeckeAlgebra,
    Vec<AffineWeylElement>,
    Vec<Vec<usize>>,
    Vec<(usize, usize)>,
);

fn gram_inputs() -> GramInputs {
    let n = 2usize;
    let algebra = weilrep::hecke::HeckeAlgebra::minimal_type(n);
    let elements: Vec<AffineWeylElement> = enumerate_up_to_length(4, n)
        .into_iter()
        .flatten()
        .collect();
    let words: Vec<Vec<usize>> = elements.iter().map(reduced_word).collect();
    let pairs: Vec<(usize, usize)> = (0..elements.len())
        .flat_map(|i| (0..elements.len()).map(move |j| (i, j)))
        .collect();
    (algebra, elements, words, pairs)
}

fn bench_gram(c: &mut Criterion) {
    let (algebra, elements, words, pairs) = gram_inputs();
    let entry = |(i, j): &(usize, usize)| {
        let mut acc = algebra.t_basis(&elements[*j]);
        for &k in &words[*i] {
            acc = algebra.gen_mul_left(k, &acc);
        }
        algebra.trace(&acc)
    };
    let mut group = c.benchmark_group("hecke_gram");
    group.sample_size(10);
    group.bench_function("seq", |b| b.iter(|| batch::map_seq(&pairs, entry).len()));
    #[cfg(feature = "parallel")]
    group.bench_function("par", |b| b.iter(|| batch::map_par(&pairs, entry).len()));
    group.finish();
}

criterion_group!(benches, bench_inversion, bench_intertwining, bench_gram);
criterion_main!(benches);
