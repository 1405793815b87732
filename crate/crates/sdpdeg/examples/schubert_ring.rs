//! The ring side: Schubert classes on G(r, n), Pieri steps, and the
//! intersection number ∫ s_k(S²Q)·s_l(S²U*) that recomputes the degree
//! without ever touching a fixed point.
//!
//!     cargo run --example schubert_ring

use sdpdeg::schubert::{chern_s2q, chern_s2u_dual, segre_in_ring, BoxShape, SchurClass};
use sdpdeg::{delta_via_schubert, ProblemTriple};

fn main() -> Result<(), sdpdeg::Error> {
    let triple = ProblemTriple::new(4, 3, 1)?;
    let shape = BoxShape::of(&triple);
    println!(
        "G({}, {}) — partitions in a {}x{} box",
        triple.r(),
        triple.n(),
        shape.rows,
        shape.cols
    );

    let unit = SchurClass::unit(shape);
    println!("sigma() . sigma(1)   = {}", unit.pieri_row(1));
    println!("sigma(1) . sigma(1)  = {}", unit.pieri_row(1).pieri_row(1));

    let k = triple.k() as usize;
    let l = triple.l() as usize;
    let s_q = segre_in_ring(&chern_s2q(&triple, k), k);
    let s_u = segre_in_ring(&chern_s2u_dual(&triple, l), l);
    println!("s_{k}(S^2 Q)  = {}", s_q[k]);
    println!("s_{l}(S^2 U*) = {}", s_u[l]);
    let product = s_q[k].mul(&s_u[l]);
    println!("product      = {}", product);
    println!("integral     = {}", product.integrate());
    assert_eq!(product.integrate(), delta_via_schubert(&triple));
    Ok(())
}
