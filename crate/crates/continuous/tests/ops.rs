//! Operation-level checks for continuous models: quadrature against frozen
//! closed-form values, net discretization guarantees, both sampling
//! pipelines against hand-traced expectations, the counting-measure reverse
//! direction, generator metadata, and the JSON interchange.

use frameforge_continuous::{
    atomic_from_frame, check_continuous_bounds, discretize_general, discretize_parseval,
    epsilon_net_discretize, exponential_on_box, exponential_on_set, gabor_stft,
    model_from_json, model_to_json, net_l1_defect, quadrature_frame_operator,
    quadrature_frame_operator_with, reverse_direction_measure, sampled_to_json,
    ContinuousError, ContinuousFrameModel, DomainRegion, Evaluator, GaborWindow,
    QuadratureConfig,
};
use frameforge_core::{C64, CVector, Field, Frame};
use nalgebra::DVector;

const EVEN_FREQS: [f64; 7] = [-6.0, -4.0, -2.0, 0.0, 2.0, 4.0, 6.0];
const SPLIT_SET: [(f64, f64); 2] = [(0.0, 0.5), (1.0, 1.3)];

fn unit_set_model(x_half: f64) -> ContinuousFrameModel {
    let freqs: Vec<f64> = (-3..=3).map(|f| f as f64).collect();
    exponential_on_box(&[(-0.5, 0.5)], &freqs, x_half).unwrap()
}

fn split_set_lattice() -> ContinuousFrameModel {
    exponential_on_set(&SPLIT_SET, &EVEN_FREQS, 2.0, 1600).unwrap()
}

fn onb_model(dim: usize) -> ContinuousFrameModel {
    atomic_from_frame(&Frame::standard_basis(Field::Real, dim)).unwrap()
}

fn constant_unit_model() -> ContinuousFrameModel {
    ContinuousFrameModel::new(
        vec![DomainRegion::Box { bounds: vec![(0.0, 1.0)], density: 1.0 }],
        Evaluator::Constant { vector: CVector::from_element(1, C64::new(1.0, 0.0)) },
    )
    .unwrap()
    .with_norm_bound(1.0)
    .unwrap()
    .with_lipschitz(0.0)
    .unwrap()
}

fn two_piece_model() -> ContinuousFrameModel {
    let e1 = CVector::from_column_slice(&[C64::new(1.0, 0.0), C64::new(0.0, 0.0)]);
    let e2 = CVector::from_column_slice(&[C64::new(0.0, 0.0), C64::new(1.0, 0.0)]);
    ContinuousFrameModel::new(
        vec![DomainRegion::Box { bounds: vec![(0.0, 2.0)], density: 1.0 }],
        Evaluator::Piecewise { breakpoints: vec![0.0, 1.0], vectors: vec![e1, e2] },
    )
    .unwrap()
    .with_norm_bound(1.0)
    .unwrap()
}

// ---------------------------------------------------------------- quadrature

#[test]
fn quadrature_identity_defect_shrinks_as_the_box_grows() {
    // Orthonormal-coordinate exponentials: the operator tends to the identity
    // as the box absorbs the sinc tails. Values frozen from exact integrals.
    let frozen = [(4.0, 5.581812383506e-2), (8.0, 1.471541376126e-2), (16.0, 6.561775584578e-3)];
    let mut last = f64::INFINITY;
    for (x_half, expected) in frozen {
        let model = unit_set_model(x_half);
        let op = quadrature_frame_operator(&model, 64).unwrap();
        let defect = op.identity_defect();
        assert!(
            (defect - expected).abs() < 1e-6,
            "half-width {x_half}: defect {defect}, expected {expected}"
        );
        assert!(defect < last);
        last = defect;
        // the closed-form tail bound on the model must dominate the truth
        assert!(model.truncation_defect.unwrap() >= defect);
    }
    let bounds = check_continuous_bounds(&unit_set_model(4.0), 64).unwrap();
    assert!((bounds.lower - 0.774707708942).abs() < 1e-6);
    assert!(bounds.is_frame());
}

#[test]
fn quadrature_sums_atom_lists_exactly() {
    let model = split_set_lattice();
    let op = quadrature_frame_operator(&model, 64).unwrap();
    let (lo, hi) = op.eigen_bounds();
    // lattice truncated at |n| <= 1600: frozen eigenvalue deviation
    assert!(((1.0 - lo) - 1.854065558e-3).abs() < 1e-8, "lower {lo}");
    assert!(hi <= 1.0 + 1e-9, "adding atoms only grows the operator; upper {hi}");
    assert!((model.truncation_defect.unwrap() - 1.854065558e-3).abs() < 1e-8);
    // the norm bound sqrt(|J|) is attained at the origin
    let at_zero = model.eval([0.0, 0.0]).norm();
    assert!((at_zero - 0.8f64.sqrt()).abs() < 1e-9);
    assert!(at_zero <= model.norm_bound.unwrap() + 1e-12);
}

#[test]
fn quadrature_gabor_operator_is_nearly_tight() {
    let model = gabor_stft(GaborWindow::gaussian(1.0).unwrap(), 6.0, 32, 4.0).unwrap();
    let cfg = QuadratureConfig { tolerance: 3e-5, ..QuadratureConfig::default() };
    let op = quadrature_frame_operator_with(&model, 64, &cfg).unwrap();
    let (lo, hi) = op.eigen_bounds();
    // frozen from the exact diagonal integrals
    assert!((lo - 1.770101778626201).abs() < 1e-3, "lower {lo}");
    assert!((hi - 1.772453850905516).abs() < 1e-3, "upper {hi}");
    // the reported shift-truncation defect covers the measured droop of the
    // edge grid points below the full-line value ||g||^2 = sqrt(pi)
    let droop = std::f64::consts::PI.sqrt() - lo;
    assert!(droop > 0.0);
    assert!(droop <= model.truncation_defect.unwrap() + 1e-3);
}

#[test]
fn quadrature_reports_nonconvergence_with_both_estimates() {
    // A jump at 4/3 is never resolved by dyadic midpoint grids: successive
    // estimates keep disagreeing by about a third of a cell.
    let e1 = CVector::from_column_slice(&[C64::new(1.0, 0.0), C64::new(0.0, 0.0)]);
    let e2 = CVector::from_column_slice(&[C64::new(0.0, 0.0), C64::new(1.0, 0.0)]);
    let model = ContinuousFrameModel::new(
        vec![DomainRegion::Box { bounds: vec![(0.0, 2.0)], density: 1.0 }],
        Evaluator::Piecewise { breakpoints: vec![0.0, 4.0 / 3.0], vectors: vec![e1, e2] },
    )
    .unwrap();
    let cfg = QuadratureConfig { tolerance: 1e-10, ..QuadratureConfig::default() };
    match quadrature_frame_operator_with(&model, 64, &cfg) {
        Err(ContinuousError::QuadratureFailure { cells, diff, estimates }) => {
            assert_eq!(cells, 1 << 20);
            assert!(diff > 1e-10 && diff.is_finite());
            let (coarse, fine) = *estimates;
            assert_eq!(fine.nrows(), 2);
            assert!((fine[(0, 0)].re - 4.0 / 3.0).abs() < 1e-3);
            assert!((coarse[(0, 0)].re - 4.0 / 3.0).abs() < 1e-3);
        }
        other => panic!("expected quadrature failure, got {other:?}"),
    }
}

#[test]
fn quadrature_rejects_norm_bound_violations() {
    let model = constant_unit_model();
    let mut lying = model.clone();
    lying.norm_bound = Some(0.5);
    match quadrature_frame_operator(&lying, 64) {
        Err(ContinuousError::InvalidInput(msg)) => assert!(msg.contains("norm")),
        other => panic!("expected invalid input, got {other:?}"),
    }
}

// ----------------------------------------------------------------------- net

#[test]
fn net_cells_cover_the_mass_within_budget() {
    let model = unit_set_model(4.0);
    let cells = epsilon_net_discretize(&model, 0.05).unwrap();
    let mass: f64 = cells.iter().map(|c| c.mass).sum();
    assert!((mass - 8.0).abs() < 1e-9, "total mass {mass}");
    assert!(net_l1_defect(&cells) < 0.05);
    assert!(cells.iter().all(|c| c.rigorous), "modulus-backed radii");
    assert!(cells.iter().all(|c| c.mass <= 1.0 + 1e-12));
    for c in &cells {
        assert!(c.lo[0] <= c.sample[0] && c.sample[0] <= c.hi[0]);
    }
}

#[test]
fn net_radii_from_probes_are_flagged() {
    // no declared modulus: radii come from probes and lose the rigorous flag
    let cells = epsilon_net_discretize(&two_piece_model(), 0.01).unwrap();
    assert!(cells.iter().all(|c| !c.rigorous));
    // piecewise-constant pieces probe at radius zero
    assert_eq!(net_l1_defect(&cells), 0.0);
    let mass: f64 = cells.iter().map(|c| c.mass).sum();
    assert!((mass - 2.0).abs() < 1e-12);

    // atoms are exact: radius zero and still rigorous
    let atom_cells = epsilon_net_discretize(&onb_model(3), 0.01).unwrap();
    assert_eq!(atom_cells.len(), 3);
    assert!(atom_cells.iter().all(|c| c.rigorous && c.range_radius == 0.0));
}

#[test]
fn net_gives_up_when_the_modulus_is_too_steep() {
    let model = ContinuousFrameModel::new(
        vec![DomainRegion::Box { bounds: vec![(0.0, 1.0)], density: 1.0 }],
        Evaluator::Constant { vector: CVector::from_element(1, C64::new(1.0, 0.0)) },
    )
    .unwrap()
    .with_lipschitz(1e12)
    .unwrap();
    match epsilon_net_discretize(&model, 1e-3) {
        Err(ContinuousError::DiscretizationFailure(msg)) => {
            assert!(msg.contains("cells") || msg.contains("cap") || msg.contains("budget"));
        }
        other => panic!("expected discretization failure, got {other:?}"),
    }
    assert!(matches!(
        epsilon_net_discretize(&constant_unit_model(), 0.0),
        Err(ContinuousError::InvalidInput(_))
    ));
}

// ----------------------------------------------------- parseval-path sampling

#[test]
fn pipeline_samples_a_constant_model_at_its_midpoint() {
    let report = discretize_parseval(&constant_unit_model(), 0.5).unwrap();
    assert_eq!(report.points, vec![[0.5, 0.0]]);
    // the smallest integer duplication factor clearing the union floor is 2
    assert_eq!(report.multiplicities, vec![2]);
    assert!((report.bounds.lower - 2.0).abs() < 1e-9);
    assert!((report.bounds.upper - 2.0).abs() < 1e-9);
    assert!(report.certificates.iter().all(|c| c.holds()));
    assert!(report.rigorous);
    assert_eq!(report.rescale, 1.0);
    assert_eq!(report.parseval_deviation, 0.0);
    assert!((report.max_sample_norm - 1.0).abs() < 1e-12);
}

#[test]
fn pipeline_returns_a_sub_multiset_of_parseval_atoms() {
    let report = discretize_parseval(&onb_model(3), 0.25).unwrap();
    assert_eq!(report.points, vec![[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]]);
    assert_eq!(report.multiplicities, vec![2, 2, 2]);
    assert!((report.bounds.lower - 2.0).abs() < 1e-9);
    assert!((report.bounds.upper - 2.0).abs() < 1e-9);
    assert!(report.certificates.iter().all(|c| c.holds()));
}

#[test]
fn pipeline_certifies_the_truncated_lattice() {
    let model = split_set_lattice();
    let report = discretize_parseval(&model, 0.5).unwrap();
    assert_eq!(report.points.len(), 3201);
    assert!(report.multiplicities.iter().all(|&m| m == 1));
    // final operator is twice the lattice operator: frozen bounds
    assert!((report.bounds.lower - 1.996291868884).abs() < 1e-6, "lower {}", report.bounds.lower);
    assert!(report.bounds.upper <= 2.0 + 1e-9, "upper {}", report.bounds.upper);
    assert!((report.parseval_deviation - 1.854065558e-3).abs() < 1e-7);
    assert!((report.max_sample_norm - 0.8f64.sqrt()).abs() < 1e-9);
    assert!(report.certificates.iter().all(|c| c.holds()));
    assert!(report.rigorous);
    // positive certified lower bound for the model itself
    let floor = report
        .certificates
        .iter()
        .find(|c| c.name.contains("sampled lower bound"))
        .unwrap();
    assert!(floor.lhs > 0.0 && floor.holds());
}

#[test]
fn pipeline_requires_samples_in_the_unit_ball() {
    let model = unbounded_model(4);
    match discretize_parseval(&model, 0.5) {
        Err(ContinuousError::InvalidInput(msg)) => assert!(msg.contains("norm bound")),
        other => panic!("expected invalid input, got {other:?}"),
    }
    let mut undeclared = constant_unit_model();
    undeclared.norm_bound = None;
    assert!(matches!(
        discretize_parseval(&undeclared, 0.5),
        Err(ContinuousError::InvalidInput(_))
    ));
}

fn unbounded_model(dim: usize) -> ContinuousFrameModel {
    frameforge_continuous::unbounded_counterexample(dim).unwrap()
}

#[test]
fn pipeline_rejects_rank_deficient_models() {
    let lone = Frame::real(2, vec![DVector::from_column_slice(&[1.0, 0.0])]).unwrap();
    let model = atomic_from_frame(&lone).unwrap();
    match discretize_parseval(&model, 0.5) {
        Err(ContinuousError::NotAContinuousFrame { lower, .. }) => assert!(lower < 1e-8),
        other => panic!("expected not-a-frame, got {other:?}"),
    }
}

#[test]
fn pipeline_walks_a_box_model_end_to_end() {
    let report = discretize_parseval(&two_piece_model(), 0.5).unwrap();
    assert_eq!(report.points, vec![[0.5, 0.0], [1.5, 0.0]]);
    assert_eq!(report.multiplicities, vec![2, 2]);
    assert!((report.bounds.lower - 2.0).abs() < 1e-9);
    assert!((report.bounds.upper - 2.0).abs() < 1e-9);
    // probe-derived radii: the result is correct but not modulus-backed
    assert!(!report.rigorous);
    assert!(report.certificates.iter().all(|c| c.holds()));
}

// ------------------------------------------------------ general-path sampling

#[test]
fn general_pipeline_rescales_a_diagonal_model() {
    let v1 = DVector::from_column_slice(&[2.0, 0.0]);
    let v2 = DVector::from_column_slice(&[0.0, 1.0]);
    let model = atomic_from_frame(&Frame::real(2, vec![v1, v2]).unwrap()).unwrap();
    let report = discretize_general(&model).unwrap();
    assert_eq!(report.points, vec![[0.0, 0.0], [1.0, 0.0]]);
    assert_eq!(report.multiplicities, vec![8, 8]);
    // mapped back to the original vectors: operator diag(32, 8)
    assert!((report.bounds.lower - 8.0).abs() < 1e-9, "lower {}", report.bounds.lower);
    assert!((report.bounds.upper - 32.0).abs() < 1e-9, "upper {}", report.bounds.upper);
    assert_eq!(report.rescale, 2.0);
    assert!((report.max_sample_norm - 2.0).abs() < 1e-12);
    assert!(report.certificates.iter().all(|c| c.holds()));
    assert!(report.bounds.is_frame());
}

#[test]
fn general_pipeline_reports_norm_growth_of_the_square_root_family() {
    // Parseval for every truncation, but the sampled vectors have norm up to
    // sqrt(dim): the pipeline must surface that growth, not hide it.
    let model = unbounded_model(8);
    let report = discretize_general(&model).unwrap();
    assert_eq!(report.points.len(), 8);
    // each orthogonal direction is its own block; the second sampling window
    // re-covers blocks four through eight, so those atoms carry two rounds
    // of the same least-common-multiple duplication factor
    assert_eq!(report.multiplicities, vec![840, 420, 280, 420, 336, 280, 240, 210]);
    assert!((report.bounds.lower - 840.0).abs() < 1e-6 * 840.0);
    assert!((report.bounds.upper - 1680.0).abs() < 1e-6 * 1680.0);
    assert!((report.max_sample_norm - 8.0f64.sqrt()).abs() < 1e-12);
    assert!((report.rescale - 8.0f64.sqrt()).abs() < 1e-12);
    assert!(report.certificates.iter().all(|c| c.holds()));
}

#[test]
fn general_pipeline_matches_the_direct_path_on_parseval_input() {
    let model = onb_model(3);
    let direct = discretize_parseval(&model, 0.5).unwrap();
    let reduced = discretize_general(&model).unwrap();
    assert_eq!(reduced.points, direct.points);
    assert_eq!(reduced.multiplicities, direct.multiplicities);
    assert_eq!(reduced.rescale, 1.0);
    assert!((reduced.bounds.lower - direct.bounds.lower).abs() < 1e-12);
    assert!((reduced.bounds.upper - direct.bounds.upper).abs() < 1e-12);
}

#[test]
fn general_pipeline_rejects_non_frames() {
    let lone = Frame::real(2, vec![DVector::from_column_slice(&[1.0, 0.0])]).unwrap();
    let model = atomic_from_frame(&lone).unwrap();
    assert!(matches!(
        discretize_general(&model),
        Err(ContinuousError::NotAContinuousFrame { .. })
    ));
}

// ------------------------------------------------------------------- reverse

#[test]
fn reverse_measure_reproduces_the_discrete_operator_exactly() {
    let v1 = DVector::from_column_slice(&[2.0, 0.0]);
    let v2 = DVector::from_column_slice(&[0.0, 1.0]);
    let model = atomic_from_frame(&Frame::real(2, vec![v1, v2]).unwrap()).unwrap();
    let sampled = discretize_general(&model).unwrap();
    let wrapped =
        reverse_direction_measure(&model, &sampled.points, &sampled.multiplicities).unwrap();
    assert!(wrapped.is_atomic());
    assert!((wrapped.total_mass() - 16.0).abs() < 1e-12);
    let op = quadrature_frame_operator(&wrapped, 64).unwrap();
    // counting measure: quadrature is the discrete frame operator, exactly
    assert!((op.entries()[(0, 0)].re - 32.0).abs() < 1e-12);
    assert!((op.entries()[(1, 1)].re - 8.0).abs() < 1e-12);
    assert!(op.entries()[(0, 1)].norm() < 1e-12);
}

#[test]
fn reverse_measure_merges_repeated_points() {
    let model = onb_model(2);
    let points = [[0.0, 0.0], [0.0, 0.0], [1.0, 0.0]];
    let mults = [1, 2, 1];
    let wrapped = reverse_direction_measure(&model, &points, &mults).unwrap();
    match &wrapped.domain[0] {
        DomainRegion::Atoms { atoms } => {
            assert_eq!(atoms.len(), 2);
            assert_eq!(atoms[0], ([0.0, 0.0], 3.0));
            assert_eq!(atoms[1], ([1.0, 0.0], 1.0));
        }
        other => panic!("expected atoms, got {other:?}"),
    }
    let op = quadrature_frame_operator(&wrapped, 64).unwrap();
    assert!((op.entries()[(0, 0)].re - 3.0).abs() < 1e-15);
    assert!((op.entries()[(1, 1)].re - 1.0).abs() < 1e-15);
}

#[test]
fn reverse_measure_turns_a_basis_into_the_identity() {
    let model = onb_model(4);
    let points: Vec<[f64; 2]> = (0..4).map(|k| [k as f64, 0.0]).collect();
    let wrapped = reverse_direction_measure(&model, &points, &[1, 1, 1, 1]).unwrap();
    let op = quadrature_frame_operator(&wrapped, 64).unwrap();
    assert!(op.identity_defect() < 1e-15);
}

#[test]
fn reverse_measure_rejects_deficient_samplings() {
    let model = onb_model(2);
    // spanning failure: never touches the second coordinate
    assert!(matches!(
        reverse_direction_measure(&model, &[[0.0, 0.0]], &[5]),
        Err(ContinuousError::InvalidInput(_))
    ));
    // zero multiplicity is not a counting measure
    assert!(matches!(
        reverse_direction_measure(&model, &[[0.0, 0.0], [1.0, 0.0]], &[1, 0]),
        Err(ContinuousError::InvalidInput(_))
    ));
    assert!(matches!(
        reverse_direction_measure(&model, &[[0.0, 0.0]], &[1, 1]),
        Err(ContinuousError::InvalidInput(_))
    ));
}

// ---------------------------------------------------------------- generators

#[test]
fn generators_reject_degenerate_windows_and_rates() {
    assert!(matches!(
        GaborWindow::new(vec![0.0, 0.0], 1.0),
        Err(ContinuousError::InvalidInput(_))
    ));
    assert!(matches!(GaborWindow::gaussian(-1.0), Err(ContinuousError::InvalidInput(_))));
    // sampling below the spread of the set would alias
    assert!(matches!(
        exponential_on_set(&SPLIT_SET, &EVEN_FREQS, 1.0, 100),
        Err(ContinuousError::InvalidInput(_))
    ));
    assert!(matches!(
        exponential_on_set(&[(0.0, 0.5), (0.4, 1.0)], &EVEN_FREQS, 2.0, 100),
        Err(ContinuousError::InvalidInput(_))
    ));
    assert!(matches!(
        frameforge_continuous::unbounded_counterexample(0),
        Err(ContinuousError::InvalidInput(_))
    ));
}

#[test]
fn generator_norm_bounds_dominate_dense_probes() {
    let lattice = split_set_lattice();
    let nb = lattice.norm_bound.unwrap();
    for k in -200..=200 {
        let t = [k as f64 * 0.21, 0.0];
        assert!(lattice.eval(t).norm() <= nb * (1.0 + 1e-9));
    }
    let gabor = gabor_stft(GaborWindow::gaussian(1.0).unwrap(), 6.0, 32, 4.0).unwrap();
    let gnb = gabor.norm_bound.unwrap();
    for i in -60..=60 {
        for j in -4..=4 {
            let t = [i as f64 * 0.1, j as f64 * 0.47];
            assert!(gabor.eval(t).norm() <= gnb * (1.0 + 1e-9));
        }
    }
    let unb = unbounded_model(6);
    assert!((unb.eval([6.0, 0.0]).norm() - 6.0f64.sqrt()).abs() < 1e-12);
    assert_eq!(unb.norm_bound.unwrap(), 6.0f64.sqrt());
}

#[test]
fn orthonormal_gram_needs_no_whitening() {
    let model = unit_set_model(4.0);
    match &model.evaluator {
        Evaluator::Exponential { whiten, .. } => {
            for i in 0..7 {
                for j in 0..7 {
                    let target = if i == j { 1.0 } else { 0.0 };
                    assert!((whiten[(i, j)].re - target).abs() < 1e-12);
                    assert!(whiten[(i, j)].im.abs() < 1e-12);
                }
            }
        }
        other => panic!("expected exponentials, got {other:?}"),
    }
    // at the origin the coordinates pick out the zero frequency exactly
    assert!((model.eval([0.0, 0.0]).norm() - 1.0).abs() < 1e-12);
}

// ---------------------------------------------------------------------- json

#[test]
fn model_json_round_trips_byte_identically() {
    let models = vec![
        onb_model(3),
        split_set_lattice(),
        gabor_stft(GaborWindow::gaussian(1.0).unwrap(), 6.0, 32, 4.0).unwrap(),
        unbounded_model(5),
        two_piece_model(),
        constant_unit_model(),
        unit_set_model(4.0),
    ];
    for model in models {
        let once = model_to_json(&model).unwrap();
        let reparsed = model_from_json(&once).unwrap();
        let twice = model_to_json(&reparsed).unwrap();
        assert_eq!(once, twice);
        assert_eq!(model.dim(), reparsed.dim());
        assert_eq!(model.field(), reparsed.field());
    }
}

#[test]
fn model_json_accepts_uniform_density_and_bare_minimum() {
    let doc = r#"{
        "domain": [{"box": [[0.0, 1.0]], "density": "uniform"}],
        "evaluator": "constant",
        "params": {"field": "real", "dim": 1, "vectors": [[1.0]]}
    }"#;
    let model = model_from_json(doc).unwrap();
    match &model.domain[0] {
        DomainRegion::Box { density, .. } => assert_eq!(*density, 1.0),
        other => panic!("expected a box, got {other:?}"),
    }
    assert!(model.norm_bound.is_none());
    assert!(matches!(model_from_json("{\"evaluator\":\"atomic\"}"), Err(_)));
    assert!(matches!(
        model_from_json(r#"{"domain":[{"box":[[0.0,1.0]]}],"evaluator":"mystery"}"#),
        Err(ContinuousError::InvalidInput(_))
    ));
}

#[test]
fn transformed_evaluators_have_no_interchange_form() {
    let inner = Evaluator::Constant { vector: CVector::from_element(1, C64::new(1.0, 0.0)) };
    let matrix = nalgebra::DMatrix::from_element(1, 1, C64::new(1.0, 0.0));
    let model = ContinuousFrameModel::new(
        vec![DomainRegion::Box { bounds: vec![(0.0, 1.0)], density: 1.0 }],
        Evaluator::Transformed { matrix, inner: Box::new(inner) },
    )
    .unwrap();
    assert!(matches!(model_to_json(&model), Err(ContinuousError::InvalidInput(_))));
}

#[test]
fn sampled_json_is_deterministic_and_complete() {
    let report = discretize_parseval(&constant_unit_model(), 0.5).unwrap();
    let a = sampled_to_json(&report);
    let b = sampled_to_json(&report);
    assert_eq!(a, b);
    assert!(a.starts_with("{\"points\":[["));
    assert!(a.contains("\"multiplicities\":[2]"));
    assert!(a.contains("sampled lower bound clears"));
    assert!(a.contains("selection envelope"));
    assert!(a.contains("\"rigorous\":true"));
    serde_json::from_str::<serde_json::Value>(&a).expect("valid JSON");
}
