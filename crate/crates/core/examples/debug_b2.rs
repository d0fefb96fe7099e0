use weylcube::linalg::Fp;
use weylcube::reps::{decompose, hom, is_indecomposable, QuiverRep};
use std::collections::BTreeMap;

fn main() {
    // re-run the sweep for one dim vector with hard validation
    let d = [1usize, 0, 2, 2, 2, 2, 2, 2];
    let report = weylcube::reps::sweep_dim_vector_debug(d, 0).unwrap();
    println!("triples: {}, survivors: {}, found: {}", report.0, report.1, report.2.len());
    if let Some(rep) = report.2.first() {
        println!("dims: {:?}", rep.dim_vector());
        println!("relations hold: {}", rep.check_relations());
        let end = hom(rep, rep).unwrap();
        println!("End dim: {}", end.dim());
        println!("is_indecomposable: {:?}", is_indecomposable(rep, 0));
        println!("decompose len: {:?}", decompose(rep, 0).map(|v| v.len()));
        for (&(s, t), m) in rep.maps() {
            if m.rows() * m.cols() > 0 {
                print!("map {s}->{t}: [");
                for r in 0..m.rows() { for c in 0..m.cols() { print!("{}", m.at(r,c)); } print!("|"); }
                println!("]");
            }
        }
        // brute-force idempotent hunt in End when small
        if end.dim() <= 16 {
            let f = Fp::new(2).unwrap();
            let _ = f;
            let mut found = 0;
            for bits in 1u64..(1 << end.dim()) {
                let mut acc = end.basis[0].scale(&(bits & 1));
                for (i, b) in end.basis.iter().enumerate().skip(1) {
                    acc = acc.add(&b.scale(&((bits >> i) & 1)));
                }
                let sq = acc.compose(&acc);
                if sq == acc && !acc.is_zero() {
                    // nontrivial if not identity
                    let id = weylcube::reps::RepMap::identity(rep);
                    if acc != id { found += 1; }
                }
            }
            println!("nontrivial idempotents in End: {found}");
        }
    }
    let _ = BTreeMap::<u32, u32>::new();
    let _: Option<QuiverRep<Fp>> = None;
}
