//! The fine Type III gradings on so(7,1) and so(5,3), with their censuses.

use cayley_gradings::d4::{census, census_csv, dim_summary, fine_type_iii, so_target, FineTypeIII};
use cayley_gradings::gradings::verify_grading;

fn main() {
    for which in FineTypeIII::ALL {
        let (model, g) = fine_type_iii(which).unwrap();
        let target = so_target(&model).unwrap();
        let rows = census(&g, &target).unwrap();
        println!("{which}: verifies {}, dims {:?}", verify_grading(&g, &target).passed(), dim_summary(&rows));
    }
    let (model, g) = fine_type_iii(FineTypeIII::OsZ2).unwrap();
    let rows = census(&g, &so_target(&model).unwrap()).unwrap();
    print!("{}", census_csv(&rows).unwrap());
}
