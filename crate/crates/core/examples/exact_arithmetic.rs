//! Exact scalars: surds stay symbolic and matrices multiply without rounding.
use symcheck::linalg::{commutator, CScalar, Matrix, Surd};

fn main() {
    let r2 = Surd::sqrt(2);
    let r3 = Surd::sqrt(3);
    println!("sqrt(2) * sqrt(2) = {}", &r2 * &r2);
    println!("sqrt(8) = {}", Surd::sqrt(8));
    println!("(sqrt2 + sqrt3)^2 = {}", &(&r2 + &r3) * &(&r2 + &r3));
    println!("1 / (1 + sqrt2) = {}", (&Surd::from_int(1) + &r2).inverse().expect("nonzero"));

    let i = CScalar::i();
    let sx = Matrix::from_rows(vec![vec![CScalar::from_int(0), CScalar::from_int(1)], vec![CScalar::from_int(1), CScalar::from_int(0)]]);
    let sy = Matrix::from_rows(vec![vec![CScalar::from_int(0), -i.clone()], vec![i.clone(), CScalar::from_int(0)]]);
    let c = commutator(&sx, &sy).expect("same size");
    println!("[sx, sy] = {:?}", c.nonzero().map(|(r, k, v)| format!("({r},{k})={v}")).collect::<Vec<_>>());
}
