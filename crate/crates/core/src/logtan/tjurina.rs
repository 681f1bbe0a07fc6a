use crate::error::LogtanError;
use crate::groebner::Ideal;
use crate::hilbert::dimension_degree;
use crate::polynomial::Polynomial;
use crate::AlgebraError;

/// Tjurina number of a reduced plane curve `V(g)` in three variables: the degree of the
/// saturated Jacobian scheme.
pub fn tjurina_plane(g: &Polynomial) -> Result<i64, LogtanError> {
    let ring = g.ring();
    if ring.nvars() != 3 {
        return Err(LogtanError::InvalidSequence(format!("plane curves live in 3 variables, got {}", ring.nvars())));
    }
    if g.is_zero() || !g.is_homogeneous() {
        return Err(LogtanError::InvalidSequence("g must be a nonzero homogeneous polynomial".into()));
    }
    let mut gens = g.gradient();
    gens.push(g.clone());
    let jacobian = Ideal::new(ring, gens)?.saturate()?;
    match dimension_degree(&jacobian) {
        Err(AlgebraError::EmptyScheme) => Ok(0),
        Ok((dim, _)) if dim > 0 => Err(LogtanError::NotReduced(dim)),
        Ok((dim, _)) if dim < 0 => Ok(0),
        Ok((_, degree)) => Ok(degree),
        Err(e) => Err(e.into()),
    }
}
