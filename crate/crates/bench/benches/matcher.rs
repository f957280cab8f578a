use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use onp_bench::synthetic;
use onp_core::{GapConstraint, MatchState, Matcher, Pattern};

fn support(c: &mut Criterion) {
    let db = synthetic(20_000);
    let gap = GapConstraint::new(0, 3).unwrap();
    let matcher = Matcher::default();
    let mut group = c.benchmark_group("support_db");
    for text in ["a[0,3]b", "a[0,3]¬cb[0,3]a", "a[0,3]b[0,3]¬da[0,3]c"] {
        let p = Pattern::parse(text, gap).unwrap();
        let mut state = MatchState::default();
        group.bench_with_input(BenchmarkId::from_parameter(text), &p, |b, p| {
            b.iter(|| matcher.support_db(black_box(&db), p, &mut state))
        });
    }
    group.finish();
}

criterion_group!(benches, support);
criterion_main!(benches);
