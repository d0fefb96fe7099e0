fn main() {
    let t0 = std::time::Instant::now();
    let report = weylcube::reps::check_case_b(2, u64::MAX, 0).unwrap();
    println!("elapsed: {:?}", t0.elapsed());
    println!("complete: {}, dimvecs: {}, triples: {}, corner_splits: {}, survivors: {}, projective_found: {}, extra: {:?}",
        report.complete, report.dim_vectors_scanned, report.triples_enumerated,
        report.corner_split_reps, report.survivors_tested, report.projective_found,
        report.extra_indecomposables);
}
