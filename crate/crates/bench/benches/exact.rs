use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use reflgroup::exact::Ring;
use reflgroup::{Cyclotomic, Matrix};
use reflgroup_bench::coxeter_group;

fn cyclotomic(c: &mut Criterion) {
    let a = Cyclotomic::root_of_unity(15, 2).plus(&Cyclotomic::root_of_unity(15, 7));
    let b = Cyclotomic::root_of_unity(12, 5).plus(&Cyclotomic::from_int(3));
    c.bench_function("cyclotomic mul", |bench| {
        bench.iter(|| black_box(&a).times(black_box(&b)))
    });
    c.bench_function("cyclotomic inverse", |bench| {
        bench.iter(|| black_box(&a).inv())
    });
}

fn matrices(c: &mut Criterion) {
    let g = coxeter_group("H4");
    let m: Matrix<Cyclotomic> = g.matrix(g.order() / 2);
    c.bench_function("H4 det(1 - xw)", |bench| {
        bench.iter(|| black_box(&m).det_one_minus_x())
    });
    c.bench_function("H4 matrix inverse", |bench| {
        bench.iter(|| black_box(&m).inverse())
    });
}

criterion_group!(benches, cyclotomic, matrices);
criterion_main!(benches);
