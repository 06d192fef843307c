use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::moments::moment;
use crate::scalar::Scalar;
use crate::weights::WeightFunction;

fn common_order(host: &Graph, k: &Graph) -> Result<usize> {
    if host.order() != k.order() {
        return Err(Error::OrderMismatch { host: host.order(), branch: k.order() });
    }
    Ok(host.order())
}

/// Moment of any `G_σ` built from `host` (weights `α`, total `A`) and `r`
/// copies of `k` (weights `β`, total `B`):
/// `r·M_H^α + r²·M_K^β + r·B·M_H^1 + (A + (r-1)B)·M_K^1`.
pub fn sigma_moment<S: Scalar>(
    host: &Graph,
    alpha: &WeightFunction<S>,
    k: &Graph,
    beta: &WeightFunction<S>,
) -> Result<S> {
    let r = S::from_count(common_order(host, k)?)?;
    let a = alpha.total_weight(host)?;
    let b = beta.total_weight(k)?;
    let m_h_unit = moment(host, &WeightFunction::Unit)?;
    let m_k_unit = moment(k, &WeightFunction::Unit)?;

    let t1 = r.try_mul(moment(host, alpha)?)?;
    let t2 = r.try_mul(r)?.try_mul(moment(k, beta)?)?;
    let t3 = r.try_mul(b)?.try_mul(m_h_unit)?;
    let t4 = a.try_add(r.try_sub(S::one())?.try_mul(b)?)?.try_mul(m_k_unit)?;
    t1.try_add(t2)?.try_add(t3)?.try_add(t4)
}

/// Unit-weight moment of `G_σ`: `r²·M_H^1 + r(2r-1)·M_K^1`.
pub fn sigma_unit_moment<S: Scalar>(host: &Graph, k: &Graph) -> Result<S> {
    let r = S::from_count(common_order(host, k)?)?;
    let two_r_minus_one = r.try_add(r)?.try_sub(S::one())?;
    let t1 = r.try_mul(r)?.try_mul(moment(host, &WeightFunction::Unit)?)?;
    let t2 = r.try_mul(two_r_minus_one)?.try_mul(moment(k, &WeightFunction::Unit)?)?;
    t1.try_add(t2)
}

/// Mean distance of `G_σ`: `d(H) + (2 - 1/r)·d(K)`.
pub fn sigma_mean_distance<S: Scalar>(host: &Graph, k: &Graph) -> Result<S> {
    let r = S::from_count(common_order(host, k)?)?;
    let r2 = r.try_mul(r)?;
    let d_h = moment(host, &WeightFunction::<S>::Unit)?.try_div(r2)?;
    let d_k = moment(k, &WeightFunction::<S>::Unit)?.try_div(r2)?;
    let factor = S::from_count(2)?.try_sub(S::one().try_div(r)?)?;
    d_h.try_add(factor.try_mul(d_k)?)
}

/// Degree distance of `G_σ`:
/// `r·M_H^δ + r²·M_K^δ + 2r·m_K·M_H^1 + 2(m_H + (r-1)m_K)·M_K^1`.
pub fn sigma_degree_moment<S: Scalar>(host: &Graph, k: &Graph) -> Result<S> {
    let r = S::from_count(common_order(host, k)?)?;
    let two = S::from_count(2)?;
    let m_h = S::from_count(host.size())?;
    let m_k = S::from_count(k.size())?;

    let t1 = r.try_mul(moment(host, &WeightFunction::Degree)?)?;
    let t2 = r.try_mul(r)?.try_mul(moment(k, &WeightFunction::Degree)?)?;
    let t3 = two.try_mul(r)?.try_mul(m_k)?.try_mul(moment(host, &WeightFunction::Unit)?)?;
    let t4 = two
        .try_mul(m_h.try_add(r.try_sub(S::one())?.try_mul(m_k)?)?)?
        .try_mul(moment(k, &WeightFunction::Unit)?)?;
    t1.try_add(t2)?.try_add(t3)?.try_add(t4)
}
