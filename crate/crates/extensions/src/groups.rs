use crate::equiv::extension_equivalent;
use crate::pair::TwistingPair;
use crate::twisted::ExtensionTable;
use crate::ExtensionError;
use abelian_linalg::{snf, AbHom, FinAbGroup, Matrix};
use cohomology::PGAction;
use constructions::{bar, FiniteGroupTable};
use homotopy_aut::{center, normalizer, PGHom};
use num_bigint::{BigInt, BigUint};
use num_traits::One;
use pgroup_core::{ElemId, PartialGroupTable, UNIT};
use std::collections::{HashMap, HashSet};
use std::sync::Arc;

/// Classification of the extensions of `H` by `K` inducing a fixed outer
/// action: the relevant cohomology group `H^2(BH, Z(K))`, its order (the
/// number of equivalence classes when any extension exists), and pairwise
/// inequivalent representatives found by exhaustive search over eta.
pub struct GroupClassification {
    pub h2: FinAbGroup,
    pub count: BigUint,
    pub representatives: Vec<ExtensionTable>,
}

/// Classifies extensions `1 -> K -> G -> H -> 1` with outer action `alpha`,
/// given per bar(H)-element automorphism representatives of bar(K).
///
/// A twisting pair realizing `alpha` is searched by brute force over inner
/// lifts of the representatives and all eta tables; absence within the
/// bound is reported, never asserted as nonexistence (the obstruction class
/// has no computed formula here).
pub fn classify_group_extensions(
    k_group: &FiniteGroupTable,
    h_group: &FiniteGroupTable,
    alpha: &[Vec<ElemId>],
    bound: usize,
) -> Result<GroupClassification, ExtensionError> {
    let fiber = Arc::new(bar(k_group, 3)?);
    let base = Arc::new(bar(h_group, 3)?);

    if alpha.len() != base.element_count() {
        return Err(ExtensionError::Unsupported(format!(
            "alpha defined on {} elements, expected {}",
            alpha.len(),
            base.element_count()
        )));
    }
    let mut alpha_homs = Vec::with_capacity(alpha.len());
    for (g, map) in alpha.iter().enumerate() {
        let hom = PGHom::new(fiber.clone(), fiber.clone(), map.clone()).map_err(|e| {
            ExtensionError::Unsupported(format!("alpha({}) is not a homomorphism: {e}", base.name(g)))
        })?;
        if hom.inverse().is_none() {
            return Err(ExtensionError::Unsupported(format!(
                "alpha({}) is not an automorphism",
                base.name(g)
            )));
        }
        alpha_homs.push(hom);
    }
    if alpha_homs[UNIT] != PGHom::identity(&fiber) {
        return Err(ExtensionError::Unsupported(
            "alpha(1) must be the identity".into(),
        ));
    }
    let norm = normalizer(&fiber);
    let inner_twists = |f: &PGHom| -> Vec<PGHom> {
        let mut out = Vec::new();
        for c in &norm.conjugations {
            let composed = c.compose(f);
            if !out.contains(&composed) {
                out.push(composed);
            }
        }
        out
    };
    for w in base.simplices(2)? {
        let (g, h) = (w.get(0), w.get(1));
        let p = base.prod2(g, h).unwrap();
        let composed = alpha_homs[g].compose(&alpha_homs[h]);
        if !inner_twists(&alpha_homs[p]).contains(&composed) {
            return Err(ExtensionError::Unsupported(format!(
                "alpha is not a homomorphism into Out on {}",
                base.render_word(w)
            )));
        }
    }

    // The induced action of H on Z(K): inner automorphisms fix the center
    // pointwise, so the representatives themselves restrict.
    let z_ids = center(&fiber);
    let pres = abelian_presentation(&fiber, &z_ids);
    let mut phi = Vec::with_capacity(base.element_count());
    for hom in &alpha_homs {
        let cols: Vec<Vec<BigInt>> = pres
            .new_generators
            .iter()
            .map(|&w| {
                pres.coords
                    .get(&hom.apply(w))
                    .expect("automorphisms preserve the center")
                    .clone()
            })
            .collect();
        let m = Matrix::from_columns(pres.group.rank(), &cols);
        phi.push(AbHom::new(pres.group.clone(), pres.group.clone(), m).map_err(|e| {
            ExtensionError::Unsupported(format!("alpha does not act on the center: {e}"))
        })?);
    }
    let action = PGAction::new(base.clone(), pres.group.clone(), phi)?;
    let h2 = action.cohomology_group(2)?;
    let count = h2.order().expect("center of a finite group is finite");

    // Search a twisting pair realizing alpha: inner lifts of t, all etas.
    let pairs: Vec<(ElemId, ElemId)> = base
        .simplices(2)?
        .iter()
        .map(|w| (w.get(0), w.get(1)))
        .collect();
    let free_slots: Vec<usize> = pairs
        .iter()
        .enumerate()
        .filter(|(_, &(g, h))| g != UNIT && h != UNIT)
        .map(|(i, _)| i)
        .collect();
    let mut lifts: Vec<Vec<PGHom>> = alpha_homs.iter().map(inner_twists).collect();
    lifts[UNIT] = vec![PGHom::identity(&fiber)];
    let t_space: u128 = lifts.iter().map(|l| l.len() as u128).product();
    let eta_space = (fiber.element_count() as u128).pow(free_slots.len() as u32);
    let space = t_space.saturating_mul(eta_space);
    if space > bound as u128 {
        return Err(ExtensionError::SearchSpaceExceeded {
            size: space,
            bound: bound as u128,
        });
    }

    let mut representatives: Vec<ExtensionTable> = Vec::new();
    let mut t_choice = vec![0usize; base.element_count()];
    'tloop: loop {
        let t: Vec<PGHom> = t_choice
            .iter()
            .enumerate()
            .map(|(g, &i)| lifts[g][i].clone())
            .collect();
        let valid = collect_valid_etas(&base, &fiber, &t, &pairs, &free_slots)?;
        if !valid.is_empty() {
            for pair in &valid {
                let ext = pair.twisted_product(None)?;
                let mut known = false;
                for rep in &representatives {
                    if extension_equivalent(rep, &ext, bound.max(ext.total().element_count()))? {
                        known = true;
                        break;
                    }
                }
                if !known {
                    representatives.push(ext);
                }
            }
            break 'tloop;
        }
        let mut g = base.element_count();
        loop {
            if g == 0 {
                break 'tloop;
            }
            g -= 1;
            t_choice[g] += 1;
            if t_choice[g] < lifts[g].len() {
                break;
            }
            t_choice[g] = 0;
        }
    }

    if representatives.is_empty() {
        return Err(ExtensionError::NoExtensionFound);
    }
    Ok(GroupClassification {
        h2,
        count,
        representatives,
    })
}

fn collect_valid_etas(
    base: &Arc<PartialGroupTable>,
    fiber: &Arc<PartialGroupTable>,
    t: &[PGHom],
    pairs: &[(ElemId, ElemId)],
    free_slots: &[usize],
) -> Result<Vec<TwistingPair>, ExtensionError> {
    let mut out = Vec::new();
    let mut eta = vec![UNIT; pairs.len()];
    let mut choice = vec![0usize; free_slots.len()];
    loop {
        for (slot, &idx) in free_slots.iter().enumerate() {
            eta[idx] = choice[slot];
        }
        let pair = TwistingPair::new(base.clone(), fiber.clone(), t.to_vec(), eta.clone())?;
        if pair.validate().is_valid() {
            out.push(pair);
        }
        let mut pos = free_slots.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < fiber.element_count() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

struct CenterPresentation {
    group: FinAbGroup,
    coords: HashMap<ElemId, Vec<BigInt>>,
    new_generators: Vec<ElemId>,
}

/// Invariant-factor presentation of a finite abelian subgroup given by a
/// closed element set: pick generators greedily, enumerate exponent
/// vectors, and put the relation lattice into Smith normal form.
fn abelian_presentation(fiber: &PartialGroupTable, z: &[ElemId]) -> CenterPresentation {
    let mul = |a: ElemId, b: ElemId| fiber.prod2(a, b).expect("center elements compose");
    let mut gens: Vec<ElemId> = Vec::new();
    let mut span: HashSet<ElemId> = HashSet::from([UNIT]);
    for &cand in z {
        if span.contains(&cand) {
            continue;
        }
        gens.push(cand);
        loop {
            let mut added = false;
            for s in span.clone() {
                for &g in &gens {
                    if span.insert(mul(s, g)) {
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
    }
    if gens.is_empty() {
        return CenterPresentation {
            group: FinAbGroup::trivial(),
            coords: z.iter().map(|&e| (e, Vec::new())).collect(),
            new_generators: Vec::new(),
        };
    }
    let orders: Vec<usize> = gens
        .iter()
        .map(|&g| {
            let mut p = g;
            let mut o = 1;
            while p != UNIT {
                p = mul(p, g);
                o += 1;
            }
            o
        })
        .collect();
    let k = gens.len();

    // Exponent vector per element (first one found), and the relation
    // lattice: the diagonal of the orders plus every box tuple that lands
    // on the unit.
    let mut exp_of: HashMap<ElemId, Vec<usize>> = HashMap::new();
    let mut relation_cols: Vec<Vec<BigInt>> = (0..k)
        .map(|i| {
            let mut col = vec![BigInt::from(0); k];
            col[i] = BigInt::from(orders[i] as i64);
            col
        })
        .collect();
    let mut e = vec![0usize; k];
    'boxes: loop {
        let mut elem = UNIT;
        for (i, &g) in gens.iter().enumerate() {
            for _ in 0..e[i] {
                elem = mul(elem, g);
            }
        }
        exp_of.entry(elem).or_insert_with(|| e.clone());
        if elem == UNIT && e.iter().any(|&x| x > 0) {
            relation_cols.push(e.iter().map(|&x| BigInt::from(x as i64)).collect());
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                break 'boxes;
            }
            pos -= 1;
            e[pos] += 1;
            if e[pos] < orders[pos] {
                break;
            }
            e[pos] = 0;
        }
    }

    let rel = Matrix::from_columns(k, &relation_cols);
    let s = snf(&rel);
    let keep: Vec<usize> = (0..k)
        .filter(|&i| !s.d.get(i, i).magnitude().is_one())
        .collect();
    let group = FinAbGroup::from_factors(keep.iter().map(|&i| s.d.get(i, i).magnitude().clone()));
    debug_assert_eq!(group.rank(), keep.len());

    let coords: HashMap<ElemId, Vec<BigInt>> = z
        .iter()
        .map(|&elem| {
            let x: Vec<BigInt> = exp_of[&elem]
                .iter()
                .map(|&v| BigInt::from(v as i64))
                .collect();
            let ux = s.u.apply(&x);
            let mut v: Vec<BigInt> = keep.iter().map(|&i| ux[i].clone()).collect();
            group.reduce_vec(&mut v);
            (elem, v)
        })
        .collect();

    // An element per canonical generator: the first center element whose
    // coordinate vector is the corresponding unit vector.
    let new_generators: Vec<ElemId> = (0..group.rank())
        .map(|j| {
            let mut target = group.zero_vec();
            target[j] = BigInt::from(1);
            *z.iter()
                .find(|&&e| coords[&e] == target)
                .expect("coordinates are surjective")
        })
        .collect();

    CenterPresentation {
        group,
        coords,
        new_generators,
    }
}
