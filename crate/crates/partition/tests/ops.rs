//! Example-level checks for the partition operations. Expected values come
//! from independent oracles: brute-force enumeration over all two-way
//! splits (bounds computed with the core eigen path), closed-form constants
//! evaluated separately, and hand-built frames whose spectra are known.

use frameforge_core::{frame_bounds, parseval_normalize, Frame};
use frameforge_partition::consts::{
    global_upper_bound, level_target, next_level_bound, ratio_limit, ratio_series_sum,
    two_split_bound,
};
use frameforge_partition::{
    complement_duality_check, exact_two_partition, finite_section_partition,
    heuristic_two_partition, multi_level_select, partition_general_frame,
    partition_result_to_json, reduce_tight_frame, select_low_trace_parts, subset_tight_frame,
    HeuristicOutcome, PartitionError,
};
use nalgebra::DVector;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn frame_of(dim: usize, cols: &[&[f64]], weights: Option<Vec<f64>>) -> Frame {
    let vectors: Vec<DVector<f64>> =
        cols.iter().map(|c| DVector::from_column_slice(c)).collect();
    match weights {
        Some(w) => Frame::real_weighted(dim, vectors, w).unwrap(),
        None => Frame::real(dim, vectors).unwrap(),
    }
}

/// `copies` interleaved copies of the standard basis, all with weight `w`.
fn onb_copies(dim: usize, copies: usize, w: f64) -> Frame {
    let mut vectors = Vec::with_capacity(dim * copies);
    for _ in 0..copies {
        for i in 0..dim {
            let mut v = DVector::zeros(dim);
            v[i] = 1.0;
            vectors.push(v);
        }
    }
    let weights = vec![w; vectors.len()];
    Frame::real_weighted(dim, vectors, weights).unwrap()
}

fn random_frame(rng: &mut ChaCha8Rng, dim: usize, m: usize) -> Frame {
    let vectors: Vec<DVector<f64>> = (0..m)
        .map(|_| DVector::from_fn(dim, |_, _| rng.random::<f64>() * 2.0 - 1.0))
        .collect();
    Frame::real(dim, vectors).unwrap()
}

/// Brute-force minimum over all two-way splits (index 0 pinned to the left)
/// of the larger side's upper bound, computed through the core eigen path.
fn split_oracle(frame: &Frame) -> f64 {
    let m = frame.len();
    let mut best = f64::INFINITY;
    for mask in 0..(1u64 << (m - 1)) {
        let full = (mask << 1) | 1;
        let left: Vec<usize> = (0..m).filter(|&j| full >> j & 1 == 1).collect();
        let right: Vec<usize> = (0..m).filter(|&j| full >> j & 1 == 0).collect();
        let val = side_upper(frame, &left).max(side_upper(frame, &right));
        if val < best {
            best = val;
        }
    }
    best
}

fn side_upper(frame: &Frame, side: &[usize]) -> f64 {
    if side.is_empty() {
        0.0
    } else {
        frame_bounds(&frame.subframe(side).unwrap()).upper
    }
}

// --- exact two-way split ---

#[test]
fn doubled_basis_splits_into_two_bases() {
    let f = frame_of(
        2,
        &[&[1.0, 0.0], &[1.0, 0.0], &[0.0, 1.0], &[0.0, 1.0]],
        Some(vec![0.5; 4]),
    );
    let oracle = split_oracle(&f);
    assert!((oracle - 0.5).abs() < 1e-12);

    let split = exact_two_partition(&f).unwrap();
    assert!((split.achieved - 0.5).abs() < 1e-12);
    assert_eq!(split.left, vec![0, 2]);
    assert_eq!(split.right, vec![1, 3]);
    // Parseval with max weighted squared norm 1/2: within the two-split bound
    assert!(split.achieved <= two_split_bound(0.5) + 1e-12);
}

#[test]
fn single_vector_split_is_trivial() {
    let f = frame_of(2, &[&[0.7, 0.0]], Some(vec![2.0]));
    let split = exact_two_partition(&f).unwrap();
    assert_eq!(split.left, vec![0]);
    assert!(split.right.is_empty());
    assert!((split.achieved - 2.0 * 0.49).abs() < 1e-12);
    assert!(split.achieved_right.abs() < 1e-15);
}

#[test]
fn two_split_bound_at_quarter_delta() {
    // (1/sqrt(2) + 1/2)^2, evaluated independently
    let expected = 1.457_106_781_186_547_5;
    assert!((two_split_bound(0.25) - expected).abs() < 1e-12);
}

#[test]
fn exact_split_over_limit_defers_to_heuristic() {
    let f = onb_copies(3, 7, 0.25); // 21 vectors
    match exact_two_partition(&f) {
        Err(PartitionError::UseHeuristic { len, limit }) => {
            assert_eq!(len, 21);
            assert_eq!(limit, 20);
        }
        other => panic!("expected UseHeuristic, got {other:?}"),
    }
}

// --- heuristic two-way split ---

#[test]
fn heuristic_balances_duplicated_basis() {
    let f = onb_copies(2, 4, 0.25);
    match heuristic_two_partition(&f, 0.5).unwrap() {
        HeuristicOutcome::Certified(split) => {
            assert!((split.achieved - 0.5).abs() < 1e-9);
            assert_eq!(split.left.len(), 4);
            assert_eq!(split.right.len(), 4);
        }
        other => panic!("expected certification, got {other:?}"),
    }
}

#[test]
fn heuristic_reports_failure_on_aligned_mass() {
    let cols: Vec<&[f64]> = vec![&[1.0, 0.0]; 8];
    let f = frame_of(2, &cols, Some(vec![0.125; 8]));
    match heuristic_two_partition(&f, 0.3).unwrap() {
        HeuristicOutcome::CertificateFailure { best, target } => {
            // any split leaves at least half the mass on one side
            assert!((best.achieved - 0.5).abs() < 1e-12);
            assert!((target - 0.3).abs() == 0.0);
        }
        other => panic!("expected CertificateFailure, got {other:?}"),
    }
}

#[test]
fn heuristic_never_beats_exact_at_small_size() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..20 {
        let raw = random_frame(&mut rng, 3, 12);
        let f = parseval_normalize(&raw, 1e-8).unwrap().frame;
        let exact = exact_two_partition(&f).unwrap();
        let heur = heuristic_two_partition(&f, f64::INFINITY).unwrap();
        let ha = heur.best().achieved;
        assert!(ha >= exact.achieved - 1e-9);
        let delta = f.max_weighted_sq_norm();
        assert!(exact.achieved <= two_split_bound(delta) + 1e-9);
        assert!(ha <= two_split_bound(delta) + 1e-9);
    }
}

// --- complement duality ---

#[test]
fn duality_on_basis_subset_all_false() {
    let f = Frame::standard_basis(frameforge_core::Field::Real, 2);
    let report = complement_duality_check(&f, &[0], 0.5, 1e-8).unwrap();
    assert!(!report.subset_in_band);
    assert!(!report.complement_in_band);
    assert!(!report.both_bessel);
    assert!(report.equivalent);
}

#[test]
fn duality_on_two_scaled_bases_all_true() {
    let f = onb_copies(2, 2, 0.5);
    let report = complement_duality_check(&f, &[0, 1], 0.5, 1e-8).unwrap();
    assert!(report.subset_in_band);
    assert!(report.complement_in_band);
    assert!(report.both_bessel);
    assert!(report.equivalent);
}

#[test]
fn duality_rejects_non_parseval_input() {
    let f = onb_copies(2, 2, 1.0);
    assert!(matches!(
        complement_duality_check(&f, &[0], 0.25, 1e-8),
        Err(PartitionError::InvalidInput(_))
    ));
}

#[test]
fn duality_with_computed_delta_on_random_subset() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let raw = random_frame(&mut rng, 3, 10);
        let f = parseval_normalize(&raw, 1e-8).unwrap().frame;
        let subset: Vec<usize> = (0..10).filter(|_| rng.random::<f64>() < 0.5).collect();
        let lower = side_lower(&f, &subset);
        let delta = if lower > 1e-6 { lower } else { 1e-6 };
        let report = complement_duality_check(&f, &subset, delta, 1e-8).unwrap();
        assert!(report.equivalent);
    }
}

fn side_lower(frame: &Frame, side: &[usize]) -> f64 {
    if side.is_empty() {
        0.0
    } else {
        frame_bounds(&frame.subframe(side).unwrap()).lower
    }
}

// --- low-trace part selection ---

#[test]
fn singleton_selection_is_sharp() {
    // 2-tight frame in dim 2 out of 8 equal-mass singletons: every singleton
    // carries Bessel exactly C N / M = 1/2
    let f = onb_copies(2, 4, 0.5);
    let parts: Vec<Vec<usize>> = (0..8).map(|j| vec![j]).collect();
    let sel = select_low_trace_parts(&f, &parts, 1).unwrap();
    assert_eq!(sel.chosen, vec![0]);
    let c = frame_bounds(&f).upper;
    assert!((c - 2.0).abs() < 1e-9);
    let bessel = side_upper(&f, &parts[0]);
    assert!((bessel - c * 2.0 / 8.0).abs() < 1e-9);
    assert!((sel.bessel_bound - 0.5).abs() < 1e-9);
}

#[test]
fn empty_part_is_chosen_first() {
    let f = onb_copies(2, 2, 0.5);
    let parts = vec![vec![0, 1], vec![], vec![2, 3]];
    let sel = select_low_trace_parts(&f, &parts, 1).unwrap();
    assert_eq!(sel.chosen, vec![1]);
    assert_eq!(sel.traces[1], 0.0);
}

#[test]
fn pair_selection_matches_exhaustive_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let raw = random_frame(&mut rng, 3, 12);
    let f = parseval_normalize(&raw, 1e-8).unwrap().frame;
    let parts = vec![vec![0, 1, 2], vec![3, 4, 5, 6], vec![7, 8], vec![9, 10, 11]];
    let sel = select_low_trace_parts(&f, &parts, 2).unwrap();

    let mut oracle = f64::INFINITY;
    for i in 0..parts.len() {
        for j in (i + 1)..parts.len() {
            oracle = oracle.min(side_upper(&f, &parts[i]).max(side_upper(&f, &parts[j])));
        }
    }
    let chosen_max =
        sel.chosen.iter().map(|&p| side_upper(&f, &parts[p])).fold(0.0, f64::max);
    assert!(chosen_max <= oracle + 1e-9);
    assert!(chosen_max <= sel.bessel_bound + 1e-9);
}

#[test]
fn selection_rejects_k_not_below_m() {
    let f = onb_copies(2, 2, 0.5);
    let parts = vec![vec![0, 1], vec![2, 3]];
    assert!(matches!(
        select_low_trace_parts(&f, &parts, 2),
        Err(PartitionError::InvalidInput(_))
    ));
}

// --- multi-level selection ---

#[test]
fn single_level_select_keeps_smallest_trace() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let f = random_frame(&mut rng, 2, 8);
    let parts: Vec<Vec<usize>> = (0..8).map(|j| vec![j]).collect();
    let sel = multi_level_select(std::slice::from_ref(&f), &parts).unwrap();

    let traces: Vec<f64> = (0..8).map(|j| f.weighted_sq_norm(j)).collect();
    let argmin = (0..8)
        .min_by(|&a, &b| traces[a].partial_cmp(&traces[b]).unwrap().then(a.cmp(&b)))
        .unwrap();
    // the survivor pool is the smaller-trace half; its lowest index leads
    assert!(traces[sel.part] <= traces[argmin] + 1e-12 || {
        let mut sorted = traces.clone();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        traces[sel.part] <= sorted[3] + 1e-12
    });
    let c = frame_bounds(&f).upper;
    let allowed = 4.0 * c * 2.0 / 8.0;
    let bessel = side_upper(&f, &parts[sel.part]);
    assert!(bessel <= allowed + 1e-9);
    assert_eq!(sel.certificates.len(), 1);
    assert!((sel.certificates[0].1 - allowed).abs() < 1e-12);
}

#[test]
fn two_level_select_verified_exhaustively() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let f1 = random_frame(&mut rng, 2, 16);
    let f2 = random_frame(&mut rng, 3, 16);
    let parts: Vec<Vec<usize>> = (0..16).map(|j| vec![j]).collect();
    let frames = [f1, f2];
    let sel = multi_level_select(&frames, &parts).unwrap();

    // every part that satisfies all per-frame bounds, found exhaustively
    let mut valid = Vec::new();
    for n in 0..16 {
        let ok = frames.iter().enumerate().all(|(p, f)| {
            let c = frame_bounds(f).upper;
            let allowed = 4f64.powi(p as i32 + 1) * c * f.dim() as f64 / 16.0;
            side_upper(f, &parts[n]) <= allowed + 1e-9
        });
        if ok {
            valid.push(n);
        }
    }
    assert!(valid.contains(&sel.part), "part {} not in valid set {valid:?}", sel.part);
}

#[test]
fn few_parts_make_selection_vacuous() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    let f1 = random_frame(&mut rng, 2, 4);
    let f2 = random_frame(&mut rng, 2, 4);
    let parts: Vec<Vec<usize>> = (0..4).map(|j| vec![j]).collect();
    // M = 4 <= 2^{P+1} = 8: bounds are loose enough for any part
    let sel = multi_level_select(&[f1, f2], &parts).unwrap();
    for (bessel, allowed) in &sel.certificates {
        assert!(bessel <= allowed);
    }
}

// --- tight-frame reduction ---

#[test]
fn nominal_bound_recursion_hits_stop_band_exactly() {
    assert_eq!(next_level_bound(200.0), 79.0);
}

#[test]
fn stop_band_input_stays_whole() {
    let f = onb_copies(2, 100, 1.0);
    let result = reduce_tight_frame(&f).unwrap();
    assert_eq!(result.parts.len(), 1);
    assert_eq!(result.parts[0].len(), 200);
    assert!(result.certificate.is_empty());
    assert!((result.per_part_bounds[0].lower - 100.0).abs() < 1e-9);
    assert!((result.per_part_bounds[0].upper - 100.0).abs() < 1e-9);
}

#[test]
fn thousand_bound_recursion_has_depth_two() {
    // nominal chain from 1000, evaluated independently:
    // 1000 -> 499 - sqrt(2000) = 454.2786...  -> 196.00 < 200
    let b1 = 0.5 * 1000.0 - 2000f64.sqrt() - 1.0;
    assert!((b1 - 454.278_640_450_004_2).abs() < 1e-9);
    let b2 = 0.5 * b1 - (2.0 * b1).sqrt() - 1.0;
    assert!(b2 < 200.0 && b2 > 79.0);
    assert_eq!(next_level_bound(1000.0), b1);

    let f = onb_copies(2, 1000, 1.0);
    let result = reduce_tight_frame(&f).unwrap();
    assert!(result.parts.len() <= 4);
    let depth = result.certificate.iter().map(|s| s.level).max().unwrap() + 1;
    assert_eq!(depth, 2);
    for step in &result.certificate {
        let nominal = if step.level == 0 { 1000.0 } else { b1 };
        assert!((step.b_m - nominal).abs() < 1e-6);
        assert!((step.target - level_target(step.b_m)).abs() < 1e-12);
        assert!(step.achieved_left <= step.target + 1e-9);
        assert!(step.achieved_right <= step.target + 1e-9);
    }
    for b in &result.per_part_bounds {
        assert!(b.lower >= 1.0 - 1e-8);
        assert!(b.upper <= global_upper_bound() * (1.0 + 1e-8));
        assert!(b.ratio() <= ratio_limit() * (1.0 + 1e-8));
    }
}

#[test]
fn reduction_rejects_bad_inputs() {
    // not tight
    let skew = frame_of(2, &[&[1.0, 0.0], &[1.0, 0.0], &[0.0, 1.0]], None);
    assert!(matches!(reduce_tight_frame(&skew), Err(PartitionError::InvalidInput(_))));
    // tight but bound exactly 1
    let pars = Frame::standard_basis(frameforge_core::Field::Real, 2);
    assert!(matches!(reduce_tight_frame(&pars), Err(PartitionError::InvalidInput(_))));
    // tight, bound 4, but vectors outside the unit ball
    let big = frame_of(2, &[&[2.0, 0.0], &[0.0, 2.0]], None);
    assert!(matches!(reduce_tight_frame(&big), Err(PartitionError::InvalidInput(_))));
}

#[test]
fn series_limit_and_global_constant() {
    // partial sums of 10 (79/200)^{m/2} / sqrt(79), evaluated independently
    let mut s = 0.0;
    let q = (79.0f64 / 200.0).sqrt();
    let mut term = 10.0 / 79.0f64.sqrt();
    for _ in 0..400 {
        s += term;
        term *= q;
    }
    assert!((ratio_series_sum() - s).abs() < 1e-10);
    assert!((ratio_limit() - s.exp()).abs() < 1e-9);
    assert!((global_upper_bound() - 200.0 * s.exp()).abs() < 1e-6);
    // magnitude sanity: ~4.1e3
    assert!(global_upper_bound() > 4.0e3 && global_upper_bound() < 4.3e3);
}

#[test]
fn partition_json_shape() {
    let f = onb_copies(2, 100, 1.0);
    let result = reduce_tight_frame(&f).unwrap();
    let json = partition_result_to_json(&result);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["parts"][0].as_array().unwrap().len(), 200);
    assert_eq!(v["parts"][0][0], 0);
    let bounds = v["bounds"][0].as_array().unwrap();
    assert!((bounds[0].as_f64().unwrap() - 100.0).abs() < 1e-9);
    assert!((bounds[1].as_f64().unwrap() - 100.0).abs() < 1e-9);
    assert_eq!(v["certificate"].as_array().unwrap().len(), 0);

    let f = onb_copies(2, 1000, 1.0);
    let result = reduce_tight_frame(&f).unwrap();
    let json = partition_result_to_json(&result);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let cert = v["certificate"].as_array().unwrap();
    assert_eq!(cert.len(), result.certificate.len());
    assert_eq!(cert[0]["level"], 0);
    assert!(cert[0]["B_m"].as_f64().unwrap() > 999.0);
    assert!(cert[0]["target"].as_f64().unwrap() > 0.5);
    assert!(cert[0]["achieved_left"].is_number());
    assert!(cert[0]["achieved_right"].is_number());
    assert_eq!(cert[0]["method"], "heuristic");
}

// --- subset extraction ---

#[test]
fn unit_granularity_subset_of_doubled_basis() {
    let f = onb_copies(3, 2, 1.0);
    let sel = subset_tight_frame(&f, 1).unwrap();
    assert_eq!(sel.indices, vec![0, 1, 2]);
    assert!((sel.bounds.lower - 1.0).abs() < 1e-9);
    assert!((sel.bounds.upper - 1.0).abs() < 1e-9);
}

#[test]
fn subset_requires_bound_above_one() {
    let f = Frame::standard_basis(frameforge_core::Field::Real, 2);
    assert!(matches!(subset_tight_frame(&f, 1), Err(PartitionError::InvalidInput(_))));
}

#[test]
fn subset_requires_short_vectors() {
    let f = onb_copies(2, 2, 1.0);
    assert!(matches!(subset_tight_frame(&f, 2), Err(PartitionError::InvalidInput(_))));
}

#[test]
fn quarter_granularity_subset_of_scaled_copies() {
    // 200 copies of a quarter-scaled basis: tight with bound 12.5
    let f = onb_copies(2, 200, 1.0 / 16.0);
    let sel = subset_tight_frame(&f, 4).unwrap();
    assert!(sel.bounds.upper <= 1.25 + 1e-8);
    assert!(sel.bounds.upper >= 1.0 - 1e-9);
    assert!(sel.bounds.lower > 0.0);
    // verify the reported bounds against the subset itself
    let direct = frame_bounds(&f.subframe(&sel.indices).unwrap());
    assert!((direct.lower - sel.bounds.lower).abs() < 1e-9);
    assert!((direct.upper - sel.bounds.upper).abs() < 1e-9);
}

// --- general (non-tight) partition ---

#[test]
fn tight_input_reduces_identically() {
    let f = onb_copies(2, 300, 1.0);
    let a = reduce_tight_frame(&f).unwrap();
    let b = partition_general_frame(&f).unwrap();
    assert_eq!(a.parts, b.parts);
    for (x, y) in a.per_part_bounds.iter().zip(&b.per_part_bounds) {
        assert!((x.lower - y.lower).abs() < 1e-9);
        assert!((x.upper - y.upper).abs() < 1e-9);
    }
}

#[test]
fn skewed_spectrum_partition_stays_in_envelope() {
    // operator diag(4, 2): lower 2, upper 4, unit vectors
    let mut cols: Vec<&[f64]> = vec![&[1.0, 0.0]; 4];
    cols.extend_from_slice(&[&[0.0, 1.0], &[0.0, 1.0]]);
    let f = frame_of(2, &cols, None);
    let result = partition_general_frame(&f).unwrap();
    let cap = global_upper_bound() * 4.0 / 2.0;
    for b in &result.per_part_bounds {
        assert!(b.lower >= 1.0 - 1e-8);
        assert!(b.upper <= cap * (1.0 + 1e-8));
    }
}

#[test]
fn diagonal_spectrum_two_three() {
    let mut cols: Vec<&[f64]> = vec![&[1.0, 0.0]; 3];
    cols.extend_from_slice(&[&[0.0, 1.0], &[0.0, 1.0]]);
    let f = frame_of(2, &cols, None);
    let result = partition_general_frame(&f).unwrap();
    let cap = global_upper_bound() * 3.0 / 2.0;
    for b in &result.per_part_bounds {
        assert!(b.lower >= 1.0 - 1e-8);
        assert!(b.upper <= cap * (1.0 + 1e-8));
    }
}

#[test]
fn parseval_input_is_a_single_part() {
    let f = Frame::standard_basis(frameforge_core::Field::Real, 3);
    let result = partition_general_frame(&f).unwrap();
    assert_eq!(result.parts, vec![vec![0, 1, 2]]);
    assert!(result.certificate.is_empty());
}

#[test]
fn general_partition_rejects_small_lower_bound() {
    let f = frame_of(2, &[&[0.5, 0.0], &[0.0, 0.5]], None);
    assert!(matches!(partition_general_frame(&f), Err(PartitionError::InvalidInput(_))));
}

// --- finite sections ---

#[test]
fn constant_sections_stabilize_immediately() {
    let f = onb_copies(2, 2, 1.0);
    let sections = vec![f.clone(), f.clone(), f];
    let report = finite_section_partition(&sections, 4.0).unwrap();
    assert_eq!(report.stabilized, vec![true, true, true]);
    assert_eq!(report.stabilized_at, Some(0));
    // completion raised each section to a 4-tight frame
    for (result, completed) in report.results.iter().zip(&report.completions) {
        assert!(result.parts.len() <= 4);
        assert!(*completed > 0);
    }
}

#[test]
fn growing_sections_report_grouping_agreement() {
    let sections =
        vec![onb_copies(2, 4, 1.0), onb_copies(2, 6, 1.0), onb_copies(2, 8, 1.0)];
    let report = finite_section_partition(&sections, 8.0).unwrap();
    for result in &report.results {
        assert!(result.parts.len() <= 8);
    }
    // oracle: recompute the grouping comparison directly from assignments
    for s in 1..3 {
        let prefix = sections[s - 1].len();
        let a = &report.assignments[s - 1];
        let b = &report.assignments[s];
        let mut agree = true;
        for i in 0..prefix {
            for j in (i + 1)..prefix {
                if (a[i] == a[j]) != (b[i] == b[j]) {
                    agree = false;
                }
            }
        }
        assert_eq!(report.stabilized[s], agree);
    }
    assert_eq!(report.assignments[2].len(), 16);
}

#[test]
fn sections_must_nest() {
    let a = onb_copies(2, 2, 1.0);
    let b = frame_of(2, &[&[0.6, 0.8], &[1.0, 0.0], &[0.0, 1.0]], None);
    assert!(matches!(
        finite_section_partition(&[a, b], 4.0),
        Err(PartitionError::InvalidInput(_))
    ));
}

#[test]
fn sections_reject_overfull_operator() {
    let f = onb_copies(2, 6, 1.0); // operator 6I exceeds K = 4
    assert!(matches!(
        finite_section_partition(&[f], 4.0),
        Err(PartitionError::InvalidInput(_))
    ));
}
