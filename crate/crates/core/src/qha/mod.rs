//! Finite-dimensional quasi-Hopf algebra engine over `Q(zeta_N)`:
//! structure-constant containers, exhaustive axiom verification, twisting,
//! the `p_R`/`q_R` identities, preset constructors, pair checking and the two
//! rank-2 biproduct constructors.

pub mod axioms;
pub mod biproduct;
pub mod data;
pub mod pairs;
pub mod pq;
pub mod presets;
pub mod tensor;
pub mod twist;

pub use axioms::{check_axioms, AxiomReport};
pub use biproduct::{biproduct_g, biproduct_theta};
pub use data::QuasiHopfData;
pub use pairs::{check_pair, from_classification, PairReport, SigmaV};
pub use pq::{pq_elements, PqReport};
pub use presets::{h2, h4, hq8, kgw, nichols, tensor_product_qha, QSign};
pub use tensor::{Scalar, Tensor, Vect};
pub use twist::{h4_twist, h4_twist_equiv, twist, H4TwistScalars, TwistData};

use crate::cyclo::CycloNum;

/// `k[C2]` as an ordinary Hopf algebra (trivial reassociator) on the basis
/// `1, g`.
pub fn kc2() -> QuasiHopfData {
    let conductor = 4;
    let labels = vec!["1".to_string(), "g".to_string()];
    let mut mult = vec![vec![Vect::zero(); 2]; 2];
    mult[0][0] = Vect::basis(0);
    mult[0][1] = Vect::basis(1);
    mult[1][0] = Vect::basis(1);
    mult[1][1] = Vect::basis(0);
    let unit = Vect::basis(0);
    let mut d0 = Tensor::zero(2);
    d0.add_term([0, 0, 0, 0], CycloNum::one(conductor));
    let mut d1 = Tensor::zero(2);
    d1.add_term([1, 1, 0, 0], CycloNum::one(conductor));
    let comult = vec![d0, d1];
    let counit = vec![CycloNum::one(conductor), CycloNum::one(conductor)];
    let mut phi = Tensor::zero(3);
    phi.add_term([0, 0, 0, 0], CycloNum::one(conductor));
    let phi_inv = phi.clone();
    let s_map = vec![Vect::basis(0), Vect::basis(1)];
    QuasiHopfData::new(
        labels,
        conductor,
        mult,
        unit,
        comult,
        counit,
        phi,
        phi_inv,
        s_map,
        Vect::basis(0),
        Vect::basis(0),
    )
}
