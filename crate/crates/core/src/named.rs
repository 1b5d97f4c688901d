//! String identifiers for the constructions, used by the command line.

use crate::cantor::GroundSet;
use crate::error::{Error, Result};
use crate::homeo::{
    code_homeo, disjoint_encode_homeo, main_pair_homeo, power_homeo, product_homeo,
    restriction_homeo, square_homeo, Homeo,
};
use crate::zoo::FilterSpec;

pub const HOMEO_NAMES: &[&str] =
    &["restriction", "product", "main", "code", "disjoint-encode", "square", "power"];

/// Parameters a named construction may need. Ground sets fall back to the
/// filter's witnesses when a filter is given.
#[derive(Clone, Debug, Default)]
pub struct HomeoArgs {
    pub omega: Option<GroundSet>,
    pub omega_star: Option<GroundSet>,
    pub filter: Option<FilterSpec>,
    pub m: Option<usize>,
    pub n: Option<usize>,
}

impl HomeoArgs {
    fn omega(&self) -> Result<GroundSet> {
        self.omega
            .clone()
            .or_else(|| self.filter.as_ref().and_then(|f| f.omega_witness().cloned()))
            .ok_or_else(|| Error::Domain("missing ground set --omega".into()))
    }

    fn omega_star(&self) -> Result<GroundSet> {
        self.omega_star
            .clone()
            .or_else(|| self.filter.as_ref().and_then(|f| f.omega_star_witness().cloned()))
            .ok_or_else(|| Error::Domain("missing ground set --omega-star".into()))
    }

    fn filter(&self) -> Result<&FilterSpec> {
        self.filter.as_ref().ok_or_else(|| Error::Domain("missing --filter".into()))
    }
}

pub fn homeo_by_name(name: &str, args: &HomeoArgs) -> Result<Homeo> {
    match name {
        "restriction" => restriction_homeo(&args.omega()?, &args.omega_star()?),
        "product" => product_homeo(&args.omega()?),
        "main" => main_pair_homeo(&args.omega()?),
        "code" => Ok(code_homeo()),
        "disjoint-encode" => Ok(disjoint_encode_homeo(&args.omega()?)),
        "square" => square_homeo(args.filter()?),
        "power" => {
            let (m, n) = (args.m.unwrap_or(2), args.n.unwrap_or(1));
            power_homeo(args.filter()?, m, n)
        }
        _ => Err(Error::UnknownName(format!("homeomorphism {name:?}"))),
    }
}
