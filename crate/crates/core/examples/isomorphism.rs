//! Search for signed relabelings between structure tensors.
use symcheck::lie::table::{bundled, Table};
use symcheck::lie::{extract_structure_constants, find_basis_map};
use symcheck::realizations::{build_so32_5d, build_sp4_phase_space};

fn main() -> symcheck::Result<()> {
    let show = |m: Option<symcheck::lie::BasisMap>| m.map_or("none".to_string(), |m| m.to_string());
    println!("sp2 -> yurke: {}", show(find_basis_map(&bundled(Table::Sp2)?, &bundled(Table::YurkeTriple)?)?));
    println!("su2 -> sp2:   {}", show(find_basis_map(&bundled(Table::Su2)?, &bundled(Table::Sp2)?)?));
    let four = extract_structure_constants(&build_sp4_phase_space().basis)?;
    let five = extract_structure_constants(&build_so32_5d().basis)?;
    println!("sp4 -> 5d:    {}", show(find_basis_map(&four, &five)?));
    Ok(())
}
