use weylcube::reps::{decompose, hom, is_indecomposable, lift_to_q};

fn main() {
    let d = [1usize, 2, 2, 2, 2, 2, 2, 1];
    let (_t, _s, reps) = weylcube::reps::sweep_dim_vector_debug(d, 0).unwrap();
    for (k, rep) in reps.iter().enumerate() {
        let end = hom(rep, rep).unwrap();
        // classify phi^2 in terms of {id, phi}
        let phi = end.basis.iter().find(|b| {
            // not a scalar multiple of identity: some block differs
            b.blocks.iter().enumerate().any(|(v, blk)| {
                let d = rep.dims()[v];
                let id = weylcube::linalg::Mat::identity(*rep.field(), d);
                *blk != id && !blk.is_zero()
            })
        });
        if let Some(phi) = phi {
            let sq = phi.compose(phi);
            println!("rep {k}: phi^2 == 0: {}, phi^2 == phi: {}", sq.is_zero(), sq == *phi);
        }
        // over Q
        let lifted = lift_to_q(rep).unwrap();
        println!(
            "rep {k}: Q relations: {}, Q end dim: {}, Q indec: {:?}",
            lifted.check_relations(),
            hom(&lifted, &lifted).unwrap().dim(),
            is_indecomposable(&lifted, 0)
        );
        for seed in 0..5 {
            let parts = decompose(rep, seed).unwrap();
            assert_eq!(parts.len(), 1, "seed {seed} split it!");
        }
    }
}
