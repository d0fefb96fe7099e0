use weylcube::reps::{decompose, hom, is_indecomposable, RepMap};

fn main() {
    let d = [1usize, 2, 2, 2, 2, 2, 2, 1];
    let (_triples, _survivors, reps) = weylcube::reps::sweep_dim_vector_debug(d, 0).unwrap();
    println!("claimed indecomposables: {}", reps.len());
    for rep in reps.iter() {
        println!("== rep, relations: {}", rep.check_relations());
        for (&(s, t), m) in rep.maps() {
            if m.rows() * m.cols() > 0 {
                print!("  {s}->{t}: ");
                for r in 0..m.rows() { for c in 0..m.cols() { print!("{}", m.at(r,c)); } print!("|"); }
                println!();
            }
        }
        let end = hom(rep, rep).unwrap();
        println!("  End dim: {}", end.dim());
        println!("  is_indec: {:?}", is_indecomposable(rep, 0));
        match decompose(rep, 0) {
            Ok(parts) => println!("  decompose: {:?}", parts.iter().map(|p| p.total_dim()).collect::<Vec<_>>()),
            Err(e) => println!("  decompose err: {e}"),
        }
        // brute force idempotents
        if end.dim() <= 20 {
            let id = RepMap::identity(rep);
            let mut nontrivial = 0u64;
            for bits in 1u64..(1 << end.dim()) {
                let mut acc = end.basis[0].scale(&(bits & 1));
                for (i, b) in end.basis.iter().enumerate().skip(1) {
                    acc = acc.add(&b.scale(&((bits >> i) & 1)));
                }
                if acc.compose(&acc) == acc && !acc.is_zero() && acc != id {
                    nontrivial += 1;
                }
            }
            println!("  brute-force nontrivial idempotents: {nontrivial}");
        }
    }
}
