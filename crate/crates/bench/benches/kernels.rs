//! Performance-sensitive kernels: exact determinants, tangency division,
//! flow windows, monodromy loops, and rotation-number cells.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use heunlab_core::josephson::{self, TorusParams};
use heunlab_core::monodromy::{self, LinearSystem};
use heunlab_core::painleve::{self, FlowPath, FlowState};
use heunlab_core::polysol::{Surface, MEMBERSHIP_TOL};
use heunlab_core::ratpoly::{det, det_cofactor, rat_int, MPoly, PolyMatrix};
use heunlab_core::spectral::{self, Sign, SurfaceSpec};
use num_complex::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn surface_polynomials(cr: &mut Criterion) {
    let mut group = cr.benchmark_group("surface-polynomial");
    for ell in [4u32, 6, 8] {
        group.bench_function(format!("build_p_{ell}"), |b| {
            b.iter(|| spectral::build_p(ell, Sign::Plus).unwrap())
        });
    }
    group.finish();
}

fn determinants(cr: &mut Criterion) {
    // 4x4 with modest polynomial entries: Bareiss vs cofactor expansion.
    let vars = ["x", "y"];
    let entry = |i: i64, j: i64| {
        MPoly::from_terms(
            &vars,
            vec![
                (vec![1, 0], rat_int(i - j)),
                (vec![0, 1], rat_int(i + j)),
                (vec![0, 0], rat_int(i * j + 1)),
            ],
        )
        .unwrap()
    };
    let entries: Vec<MPoly> = (0..4)
        .flat_map(|i| (0..4).map(move |j| entry(i, j)))
        .collect();
    let m = PolyMatrix::new(4, 4, entries).unwrap();
    let mut group = cr.benchmark_group("determinant-4x4");
    group.bench_function("bareiss", |b| b.iter(|| det(&m).unwrap()));
    group.bench_function("cofactor", |b| b.iter(|| det_cofactor(&m).unwrap()));
    group.finish();
}

fn tangency_multiplier(cr: &mut Criterion) {
    let p = spectral::build_p(6, Sign::Minus).unwrap();
    cr.bench_function("multiplier_6", |b| {
        b.iter_batched(
            || p.clone(),
            |p| painleve::multiplier_of(&p, 6).unwrap(),
            BatchSize::SmallInput,
        )
    });
}

fn flow_window(cr: &mut Criterion) {
    let surface = Surface::new(SurfaceSpec::new(1, Sign::Minus).unwrap()).unwrap();
    let pts = surface
        .sample(c(0.35, 0.0), c(1.0, 0.0), MEMBERSHIP_TOL)
        .unwrap();
    let p = pts[0];
    let start = FlowState {
        chi: p.chi,
        a: p.a,
        s: p.s,
        ell: c(1.0, 0.0),
    };
    cr.bench_function("flow_1_to_2", |b| {
        b.iter(|| painleve::flow(start, c(2.0, 0.0), &FlowPath::Radial, 1e-10).unwrap())
    });
}

fn monodromy_loop(cr: &mut Criterion) {
    let sys = LinearSystem::Extended {
        ell: c(0.3, 0.0),
        chi: c(0.2, 0.1),
        a: c(0.7, -0.3),
        s: c(1.1, 0.2),
    };
    cr.bench_function("monodromy_loop", |b| {
        b.iter(|| monodromy::monodromy_matrix(&sys, 1.0, 1e-12).unwrap())
    });
    cr.bench_function("residue_quadrature_256", |b| {
        b.iter(|| monodromy::residue_quadrature(3, c(1.0, 0.0), 256))
    });
}

fn rotation_cell(cr: &mut Criterion) {
    let params = TorusParams::new(1.7, 1.3, 1.0).unwrap();
    cr.bench_function("rotation_number_200", |b| {
        b.iter(|| josephson::rotation_number(&params, 200, 1e-6).unwrap())
    });
}

criterion_group!(
    benches,
    surface_polynomials,
    determinants,
    tangency_multiplier,
    flow_window,
    monodromy_loop,
    rotation_cell
);
criterion_main!(benches);
