//! Parallel vs single-thread timings for the exhaustive kernels.
//!
//! With the `parallel` feature (default) the same code path is measured on
//! the default rayon pool and on a one-thread pool; building with
//! `--no-default-features` benches the sequential fallback directly.

use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use groupact::census::{enumerate_actions, CensusOpts};
use groupact::datum::extend;
use groupact::fixtures;
use groupact::galois::gamma_prime_surjective;
use groupact::skew::SkewAlgebra;
use groupact::{brandt_groupoid, cyclic_group, SplitRing};

fn big_skew() -> SkewAlgebra {
    // a global action of the 3×3 matrix groupoid over Z₃ on F₃⁹: dim 81
    let h = cyclic_group(3);
    let gd = Arc::new(brandt_groupoid(3, &h).unwrap());
    let ring = Arc::new(SplitRing::with_unit_atoms(3, 9));
    let base = 0;
    let tau = groupact::Transversal::canonical(&gd, base).unwrap();
    let mut ideals = Vec::new();
    let mut tau_isos = Vec::new();
    for y in gd.objects() {
        ideals.push(groupact::Ideal::from_atoms(&[3 * y, 3 * y + 1, 3 * y + 2]));
    }
    for y in gd.objects() {
        tau_isos.push(
            groupact::PartialRingIso::new((0..3).map(|i| (i, 3 * y + i)).collect()).unwrap(),
        );
    }
    let (ggd, loops) = gd.isotropy(base).unwrap();
    let i0 = ideals[0];
    let rot = groupact::PartialRingIso::new(vec![(0, 1), (1, 2), (2, 0)]).unwrap();
    let rot2 = groupact::PartialRingIso::compose(&rot, &rot);
    let group = groupact::IsotropyAction {
        action: groupact::PartialAction::new(
            Arc::new(ggd),
            Arc::clone(&ring),
            vec![i0, i0, i0],
            vec![groupact::PartialRingIso::identity(i0), rot, rot2],
        ),
        loops,
    };
    let datum = groupact::Datum::new(gd, ring, tau, ideals, tau_isos, group).unwrap();
    let theta = extend(&datum);
    SkewAlgebra::build(&theta).unwrap()
}

fn with_threads<T>(threads: Option<usize>, f: impl Fn() -> T + Sync + Send) -> T
where
    T: Send,
{
    #[cfg(feature = "parallel")]
    {
        match threads {
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .expect("pool")
                .install(f),
            None => f(),
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        f()
    }
}

fn bench_assoc(c: &mut Criterion) {
    let skew = big_skew();
    let mut group = c.benchmark_group("assoc_check");
    for (label, threads) in [("parallel", None), ("single_thread", Some(1))] {
        group.bench_with_input(BenchmarkId::from_parameter(label), &threads, |b, &t| {
            b.iter(|| with_threads(t, || skew.assoc_check()));
        });
    }
    group.finish();
}

fn bench_gamma_prime_span(c: &mut Criterion) {
    let skew = big_skew();
    let mut group = c.benchmark_group("gamma_prime_span");
    for (label, threads) in [("parallel", None), ("single_thread", Some(1))] {
        group.bench_with_input(BenchmarkId::from_parameter(label), &threads, |b, &t| {
            b.iter(|| with_threads(t, || gamma_prime_surjective(&skew).unwrap()));
        });
    }
    group.finish();
}

fn bench_action_census(c: &mut Criterion) {
    let gd = fixtures::hex_groupoid();
    let ring = Arc::new(SplitRing::with_unit_atoms(3, 3));
    let opts = CensusOpts { max_candidates: 60_000 };
    let mut group = c.benchmark_group("action_census");
    group.sample_size(10);
    for (label, threads) in [("parallel", None), ("single_thread", Some(1))] {
        group.bench_with_input(BenchmarkId::from_parameter(label), &threads, |b, &t| {
            b.iter(|| with_threads(t, || enumerate_actions(&gd, &ring, opts).actions.len()));
        });
    }
    group.finish();
}

criterion_group!(benches, bench_assoc, bench_gamma_prime_span, bench_action_census);
criterion_main!(benches);
