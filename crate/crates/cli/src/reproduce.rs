//! The reproduction suite: recomputes the reference polynomials, tables and
//! sign patterns of the chiseled families and checks them exactly.
//!
//! Each item is independent and reports pass/fail with a detail line;
//! failures name the first differing coefficient. Progress goes to standard
//! error so standard output stays machine-parsable.

use chisel_core::bvalpha::{
    alpha_table, check_box_corner_positivity, reconstruct_ehrhart_from_alpha,
    scan_alpha_positivity,
};
use chisel_core::counting::{count_points, ehrhart_via_counting, CountOptions};
use chisel_core::ehrhart::{
    ehrhart_chiseled_cube, ehrhart_corner_chiseled_box, ehrhart_corner_chiseled_cube,
    ehrhart_cube_tower, ehrhart_cube_tower_product, ehrhart_hex_tower, ehrhart_hex_tower_product,
    product_scale_bounds,
};
use chisel_core::poly::{hstar_transform, Polynomial};
use chisel_core::polytope::{
    make_box, parse_polytope_file, ChiselBase, ChiselPlan, SmoothPolytope,
};
use chisel_core::rational::{int, parse_rational, rat, rat_int, ratio, to_int, Int, Rational};

/// The bundled inequality description of the 9-dimensional smooth reflexive
/// example.
pub const EXAMPLE_9D: &str = include_str!("../data/example14.poly");

#[derive(Clone, Debug)]
pub struct ReproduceOptions {
    /// Case-insensitive substring filter on item ids.
    pub only: Option<String>,
    pub threads: usize,
    pub budget: u128,
}

impl Default for ReproduceOptions {
    fn default() -> Self {
        let counts = CountOptions::default();
        ReproduceOptions {
            only: None,
            threads: counts.threads,
            budget: counts.budget,
        }
    }
}

impl ReproduceOptions {
    fn count_options(&self) -> CountOptions {
        CountOptions {
            threads: self.threads,
            budget: self.budget,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ItemOutcome {
    pub id: &'static str,
    pub description: &'static str,
    pub passed: bool,
    pub detail: String,
}

type ItemFn = fn(&ReproduceOptions) -> Result<String, String>;

/// All reproduction items, in execution order.
pub const ITEMS: &[(&str, &str, ItemFn)] = &[
    ("b3", "stage-3 tower polynomial", item_b3),
    ("b4", "stage-4 tower polynomial", item_b4),
    ("b4-count", "stage-4 tower counting oracle", item_b4_count),
    ("q7", "fully chiseled 7-cube (a=5, b=2)", item_q7),
    ("p1-28", "tower product, n=1, k=28, default scale", item_p1_28),
    ("p1-6", "tower product, n=1, k=6, a=730, with h*", item_p1_6),
    ("p2-8", "tower product, n=2, k=8, a=8599, with h* and point totals", item_p2_8),
    ("q1-5", "hexagon tower product, n=1, k=5, a=457, with h*", item_q1_5),
    ("q3-9", "hexagon tower product, n=3, k=9, a=46099", item_q3_9),
    ("table1", "alpha table rows 1..7", item_table1),
    ("alpha-scan", "alpha positivity boundary at n=7", item_alpha_scan),
    ("reconstruct", "Ehrhart reconstruction from alpha values", item_reconstruct),
    ("box-positive", "random corner-chiseled boxes stay positive", item_box_positive),
    ("example-9d", "9-dimensional smooth reflexive example", item_example_9d),
    ("oracle", "symbolic families against brute-force counts", item_oracle),
    ("geometry", "vertex, edge and facet count laws", item_geometry),
];

/// Runs the (filtered) suite.
pub fn run(opts: &ReproduceOptions) -> Vec<ItemOutcome> {
    let filter = opts.only.as_ref().map(|s| s.to_lowercase());
    ITEMS
        .iter()
        .filter(|(id, _, _)| {
            filter
                .as_ref()
                .is_none_or(|f| id.to_lowercase().contains(f))
        })
        .map(|&(id, description, f)| {
            eprintln!("[reproduce] running {id}: {description}");
            let outcome = f(opts);
            let passed = outcome.is_ok();
            let detail = outcome.unwrap_or_else(|e| e);
            eprintln!("[reproduce] {} {id}", if passed { "ok" } else { "FAILED" });
            ItemOutcome {
                id,
                description,
                passed,
                detail,
            }
        })
        .collect()
}

/// Exact comparison with a first-difference diagnostic.
pub fn compare_poly(label: &str, computed: &Polynomial, expected: &Polynomial) -> Result<String, String> {
    if computed == expected {
        return Ok(format!("{label}: {computed}"));
    }
    let top = computed
        .degree()
        .unwrap_or(0)
        .max(expected.degree().unwrap_or(0));
    for i in 0..=top {
        if computed.coeff(i) != expected.coeff(i) {
            return Err(format!(
                "{label}: coefficient of t^{i} differs: computed {}, expected {}",
                computed.coeff(i),
                expected.coeff(i)
            ));
        }
    }
    Err(format!("{label}: polynomials differ"))
}

pub fn compare_values(
    label: &str,
    computed: &[Rational],
    expected: &[Rational],
) -> Result<String, String> {
    if computed == expected {
        let rendered: Vec<String> = computed.iter().map(|v| v.to_string()).collect();
        return Ok(format!("{label}: ({})", rendered.join(", ")));
    }
    for i in 0..computed.len().max(expected.len()) {
        let c = computed.get(i);
        let e = expected.get(i);
        if c != e {
            return Err(format!(
                "{label}: entry {i} differs: computed {}, expected {}",
                c.map_or("<missing>".into(), |v| v.to_string()),
                e.map_or("<missing>".into(), |v| v.to_string())
            ));
        }
    }
    Err(format!("{label}: values differ"))
}

fn poly(coeffs: &[&str]) -> Polynomial {
    Polynomial::from_coeffs(
        coeffs
            .iter()
            .map(|s| parse_rational(s).expect("literal rational"))
            .collect(),
    )
}

fn rationals(values: &[&str]) -> Vec<Rational> {
    values
        .iter()
        .map(|s| parse_rational(s).expect("literal rational"))
        .collect()
}

fn core_err(e: chisel_core::Error) -> String {
    e.to_string()
}

// ---- reference values ----

pub fn expected_tower_3() -> Polynomial {
    poly(&["1", "9", "1719", "18591"])
}

pub fn expected_tower_4() -> Polynomial {
    poly(&["1", "-45", "15363", "501921"])
}

pub fn expected_chiseled_cube_7() -> Polynomial {
    // the t^5 coefficient 589345/9 is derived from the closed form
    poly(&[
        "1",
        "-11/7",
        "1729/5",
        "182027/45",
        "64729/3",
        "589345/9",
        "1640113/15",
        "24608351/315",
    ])
}

pub fn expected_product_1_28() -> Polynomial {
    poly(&[
        "1",
        "-2541865828329",
        "-248254149429756452913678525969",
        "619688517319652881734980589359332452421773",
        "5633398927928862087321748973638659814694960718075062244",
    ])
}

pub fn expected_product_1_6() -> Polynomial {
    poly(&["1", "-971", "-1215", "1271473119", "267104933370"])
}

pub fn expected_product_1_6_hstar() -> Vec<Rational> {
    rationals(&[
        "1",
        "268376404299",
        "2941968690561",
        "2934339846011",
        "265833460008",
    ])
}

pub fn expected_product_2_8() -> Polynomial {
    poly(&[
        "1",
        "-9775",
        "-289492130",
        "-237422178",
        "12014689492982241",
        "19723429316570261841",
    ])
}

pub fn expected_product_2_8_hstar() -> Vec<Rational> {
    rationals(&[
        "1",
        "19735444005536319994",
        "512929309125860809290",
        "1301746334895061755914",
        "512689015334843195945",
        "19711414627129339776",
    ])
}

pub fn expected_hex_product_1_5() -> Polynomial {
    poly(&["1", "-191", "-648", "176889015", "19125906543"])
}

pub fn expected_hex_product_1_5_hstar() -> Vec<Rational> {
    rationals(&[
        "1",
        "19302794715",
        "210915640245",
        "209854304999",
        "18949017072",
    ])
}

pub fn expected_hex_product_3_9() -> Polynomial {
    poly(&[
        "1",
        "-19167",
        "-13464323277",
        "-615783337806158",
        "-340786031913009",
        "331568043035736113553429",
        "2178889417115552212024508181",
    ])
}

pub fn expected_example_9d() -> Polynomial {
    poly(&[
        "1",
        "-6673/630",
        "11915/1008",
        "3838711/9072",
        "117857/64",
        "19058687/4320",
        "630095/96",
        "9074291/1512",
        "12477727/4032",
        "12477727/18144",
    ])
}

pub fn expected_alpha_table() -> Vec<Vec<Rational>> {
    vec![
        rationals(&["1/2", "1"]),
        rationals(&["1/8", "1/2", "1"]),
        rationals(&["1/24", "5/36", "1/2", "1"]),
        rationals(&["1/64", "1/24", "7/48", "1/2", "1"]),
        rationals(&["1/160", "9/800", "1/24", "3/20", "1/2", "1"]),
        rationals(&["1/384", "1/720", "127/14400", "1/24", "11/72", "1/2", "1"]),
        rationals(&[
            "1/896", "-5/3136", "-1/800", "61/8400", "1/24", "13/84", "1/2", "1",
        ]),
    ]
}

// ---- items ----

fn item_b3(_: &ReproduceOptions) -> Result<String, String> {
    let computed = ehrhart_cube_tower(3).map_err(core_err)?;
    compare_poly("stage-3 tower", &computed, &expected_tower_3())
}

fn item_b4(_: &ReproduceOptions) -> Result<String, String> {
    let computed = ehrhart_cube_tower(4).map_err(core_err)?;
    compare_poly("stage-4 tower", &computed, &expected_tower_4())
}

fn tower_polytope(k: u32) -> Result<SmoothPolytope, String> {
    let depths: Vec<Int> = (0..k).rev().map(|j| int(3).pow(j)).collect();
    ChiselPlan {
        base: ChiselBase::Cube {
            dim: 3,
            scale: int(3).pow(k),
        },
        depths,
    }
    .apply()
    .map_err(core_err)
}

fn hex_tower_polytope(k: u32) -> Result<SmoothPolytope, String> {
    let depths: Vec<Int> = (0..k).rev().map(|j| int(3).pow(j)).collect();
    ChiselPlan {
        base: ChiselBase::HexagonPrism {
            scale: int(3).pow(k),
        },
        depths,
    }
    .apply()
    .map_err(core_err)
}

fn item_b4_count(opts: &ReproduceOptions) -> Result<String, String> {
    let p = tower_polytope(4)?;
    let counted = ehrhart_via_counting(&p, &opts.count_options()).map_err(core_err)?;
    compare_poly("stage-4 tower from counts", &counted, &expected_tower_4())
}

fn item_q7(_: &ReproduceOptions) -> Result<String, String> {
    let computed = ehrhart_chiseled_cube(7, &int(5), &int(2)).map_err(core_err)?;
    compare_poly("chiseled 7-cube", &computed, &expected_chiseled_cube_7())
}

fn item_p1_28(_: &ReproduceOptions) -> Result<String, String> {
    let bounds = product_scale_bounds(1, 28).map_err(core_err)?;
    if !bounds.all_hold() {
        return Err("default-scale bounds fail at n=1, k=28".into());
    }
    if bounds.scale != "498205702352484".parse::<Int>().unwrap() {
        return Err(format!("default scale is {}, expected 498205702352484", bounds.scale));
    }
    let computed = ehrhart_cube_tower_product(1, 28, &bounds.scale).map_err(core_err)?;
    compare_poly("tower product n=1 k=28", &computed, &expected_product_1_28())
}

fn check_hstar(
    label: &str,
    p: &Polynomial,
    expected: &[Rational],
) -> Result<String, String> {
    let h = hstar_transform(p).map_err(core_err)?;
    if !h.integral {
        return Err(format!("{label}: h* vector is not integral"));
    }
    compare_values(label, &h.values, expected)
}

fn item_p1_6(_: &ReproduceOptions) -> Result<String, String> {
    let computed = ehrhart_cube_tower_product(1, 6, &int(730)).map_err(core_err)?;
    let a = compare_poly("tower product n=1 k=6", &computed, &expected_product_1_6())?;
    let b = check_hstar(
        "h* of tower product n=1 k=6",
        &computed,
        &expected_product_1_6_hstar(),
    )?;
    Ok(format!("{a}; {b}"))
}

fn item_p2_8(_: &ReproduceOptions) -> Result<String, String> {
    let computed = ehrhart_cube_tower_product(2, 8, &int(8599)).map_err(core_err)?;
    let a = compare_poly("tower product n=2 k=8", &computed, &expected_product_2_8())?;
    let b = check_hstar(
        "h* of tower product n=2 k=8",
        &computed,
        &expected_product_2_8_hstar(),
    )?;
    // lattice points of the polytope itself and of its boundary
    let total = computed.eval(&rat(1));
    let expected_total = rat_int(&"19735444005536320000".parse::<Int>().unwrap());
    if total != expected_total {
        return Err(format!(
            "lattice point total differs: computed {total}, expected {expected_total}"
        ));
    }
    let interior = computed.eval(&rat(-1)) * rat(-1); // odd dimension 5
    let boundary = &total - &interior;
    let expected_boundary = rat_int(&"24029378406980224".parse::<Int>().unwrap());
    if boundary != expected_boundary {
        return Err(format!(
            "boundary point total differs: computed {boundary}, expected {expected_boundary}"
        ));
    }
    Ok(format!("{a}; {b}; {total} lattice points, {boundary} on the boundary"))
}

fn item_q1_5(_: &ReproduceOptions) -> Result<String, String> {
    let computed = ehrhart_hex_tower_product(1, 5, &int(457)).map_err(core_err)?;
    let a = compare_poly(
        "hexagon tower product n=1 k=5",
        &computed,
        &expected_hex_product_1_5(),
    )?;
    let b = check_hstar(
        "h* of hexagon tower product n=1 k=5",
        &computed,
        &expected_hex_product_1_5_hstar(),
    )?;
    Ok(format!("{a}; {b}"))
}

fn item_q3_9(_: &ReproduceOptions) -> Result<String, String> {
    let computed = ehrhart_hex_tower_product(3, 9, &int(46099)).map_err(core_err)?;
    compare_poly(
        "hexagon tower product n=3 k=9",
        &computed,
        &expected_hex_product_3_9(),
    )
}

fn item_table1(_: &ReproduceOptions) -> Result<String, String> {
    let computed = alpha_table(7).map_err(core_err)?;
    let expected = expected_alpha_table();
    for (n, (c, e)) in computed.iter().zip(&expected).enumerate() {
        compare_values(&format!("alpha table row n={}", n + 1), c, e)?;
    }
    Ok("all 35 alpha table entries match".into())
}

fn item_alpha_scan(_: &ReproduceOptions) -> Result<String, String> {
    for n in 1..=6 {
        let scan = scan_alpha_positivity(n).map_err(core_err)?;
        if !scan.all_positive {
            return Err(format!("row n={n} unexpectedly has nonpositive entries"));
        }
    }
    let scan = scan_alpha_positivity(7).map_err(core_err)?;
    if scan.all_positive {
        return Err("row n=7 unexpectedly all positive".into());
    }
    let expected = vec![(1usize, ratio(-5, 3136)), (2usize, ratio(-1, 800))];
    if scan.negative_entries != expected {
        return Err(format!(
            "negative entries at n=7 differ: computed {:?}",
            scan.negative_entries
        ));
    }
    Ok("rows 1..6 positive; n=7 negative at k=1 (-5/3136) and k=2 (-1/800)".into())
}

fn item_reconstruct(_: &ReproduceOptions) -> Result<String, String> {
    for n in 1..=8usize {
        for (a, b) in [(2i64, 1i64), (3, 1), (3, 2), (5, 2)] {
            let rebuilt = reconstruct_ehrhart_from_alpha(n, &int(a), &int(b)).map_err(core_err)?;
            let closed = ehrhart_corner_chiseled_cube(n, &int(a), &int(b)).map_err(core_err)?;
            compare_poly(&format!("reconstruction n={n} a={a} b={b}"), &rebuilt, &closed)?;
        }
    }
    Ok("reconstruction matches the closed form for n <= 8 and four (a,b) pairs".into())
}

fn item_box_positive(_: &ReproduceOptions) -> Result<String, String> {
    let mut state: u64 = 0x00b0c0d0e0f01234;
    let mut next = move |bound: u64| {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        state % bound
    };
    for case in 0..200 {
        let n = 1 + next(8) as usize;
        let b = 1 + next(19) as i64;
        let sides: Vec<Int> = (0..n).map(|_| int(b + 1 + next(20 - b as u64) as i64)).collect();
        let report = check_box_corner_positivity(&sides, &int(b)).map_err(core_err)?;
        if !report.all_positive {
            return Err(format!(
                "case {case}: sides {sides:?}, b={b}: nonpositive coefficient in {}",
                report.polynomial
            ));
        }
        if !report.bound_holds {
            return Err(format!(
                "case {case}: sides {sides:?}, b={b}: coefficientwise bound fails"
            ));
        }
    }
    Ok("200 random corner-chiseled boxes: positive coefficients, bound chain holds".into())
}

fn item_example_9d(opts: &ReproduceOptions) -> Result<String, String> {
    let data = parse_polytope_file(EXAMPLE_9D).map_err(core_err)?;
    let p = SmoothPolytope::from_halfspaces(data.dim, data.halfspaces).map_err(core_err)?;
    let report = p.validate().map_err(core_err)?;
    if !report.is_smooth {
        return Err("example polytope is not smooth".into());
    }
    if !report.is_reflexive {
        return Err("example polytope is not reflexive".into());
    }
    let expected = expected_example_9d();
    if expected.coeff(1) != ratio(-6673, 630) {
        return Err("expected linear coefficient is not -6673/630".into());
    }
    let value = expected.eval(&rat(1));
    let expected_count =
        to_int(&value).ok_or_else(|| format!("polynomial value at t=1 is not an integer: {value}"))?;
    let sample = count_points(&p, &int(1), false, &opts.count_options()).map_err(core_err)?;
    if sample.count != expected_count {
        return Err(format!(
            "lattice point count differs: counted {}, polynomial gives {expected_count}",
            sample.count
        ));
    }
    // reflexivity means the origin is the only interior lattice point
    let interior = count_points(&p, &int(1), true, &opts.count_options()).map_err(core_err)?;
    if interior.count != int(1) {
        return Err(format!(
            "interior count at t=1 is {}, expected 1 for a reflexive polytope",
            interior.count
        ));
    }
    Ok(format!(
        "smooth and reflexive; {} vertices, {} facets; {} lattice points at t=1, one interior; linear coefficient -6673/630",
        report.vertex_count, report.facet_count, sample.count
    ))
}

/// The small instances where geometry, counting and the symbolic engine can
/// all be compared directly.
fn oracle_instances() -> Result<Vec<(&'static str, SmoothPolytope, Polynomial)>, String> {
    let mut out: Vec<(&'static str, SmoothPolytope, Polynomial)> = Vec::new();
    out.push((
        "tower stage 1",
        tower_polytope(1)?,
        ehrhart_cube_tower(1).map_err(core_err)?,
    ));
    out.push((
        "tower stage 2",
        tower_polytope(2)?,
        ehrhart_cube_tower(2).map_err(core_err)?,
    ));
    let chiseled = |n: usize, a: i64, b: i64| -> Result<SmoothPolytope, String> {
        make_box(&vec![int(a); n])
            .map_err(core_err)?
            .chisel_all(&int(b))
            .map_err(core_err)
    };
    out.push((
        "chiseled square a=3 b=1",
        chiseled(2, 3, 1)?,
        ehrhart_chiseled_cube(2, &int(3), &int(1)).map_err(core_err)?,
    ));
    out.push((
        "chiseled cube a=3 b=1",
        chiseled(3, 3, 1)?,
        ehrhart_chiseled_cube(3, &int(3), &int(1)).map_err(core_err)?,
    ));
    out.push((
        "chiseled cube a=5 b=2",
        chiseled(3, 5, 2)?,
        ehrhart_chiseled_cube(3, &int(5), &int(2)).map_err(core_err)?,
    ));
    let corner = |n: usize, a: i64, b: i64| -> Result<SmoothPolytope, String> {
        make_box(&vec![int(a); n])
            .map_err(core_err)?
            .chisel_vertex(0, &int(b))
            .map_err(core_err)
    };
    out.push((
        "corner-chiseled square a=3 b=1",
        corner(2, 3, 1)?,
        ehrhart_corner_chiseled_cube(2, &int(3), &int(1)).map_err(core_err)?,
    ));
    out.push((
        "corner-chiseled cube a=2 b=1",
        corner(3, 2, 1)?,
        ehrhart_corner_chiseled_cube(3, &int(2), &int(1)).map_err(core_err)?,
    ));
    out.push((
        "corner-chiseled box 2x3 b=1",
        make_box(&[int(2), int(3)])
            .map_err(core_err)?
            .chisel_vertex(0, &int(1))
            .map_err(core_err)?,
        ehrhart_corner_chiseled_box(&[int(2), int(3)], &int(1)).map_err(core_err)?,
    ));
    out.push((
        "hexagon tower stage 1",
        hex_tower_polytope(1)?,
        ehrhart_hex_tower(1).map_err(core_err)?,
    ));
    Ok(out)
}

fn item_oracle(opts: &ReproduceOptions) -> Result<String, String> {
    let instances = oracle_instances()?;
    let count = instances.len();
    for (label, polytope, symbolic) in instances {
        let counted = ehrhart_via_counting(&polytope, &opts.count_options()).map_err(core_err)?;
        compare_poly(label, &counted, &symbolic)?;
    }
    Ok(format!("{count} instances: interpolated counts equal the symbolic polynomials"))
}

fn item_geometry(_: &ReproduceOptions) -> Result<String, String> {
    // vertex count multiplies by the dimension at every full chisel stage;
    // tower facet counts follow 4*3^k + 2
    let mut p = make_box(&vec![int(3).pow(4); 3]).map_err(core_err)?;
    let mut expected_vertices = 8usize;
    for (k, depth) in (0..4u32).rev().map(|j| int(3).pow(j)).enumerate() {
        p = p.chisel_all(&depth).map_err(core_err)?;
        expected_vertices *= 3;
        if p.vertex_count() != expected_vertices {
            return Err(format!(
                "tower stage {}: {} vertices, expected {expected_vertices}",
                k + 1,
                p.vertex_count()
            ));
        }
        let expected_facets = 4 * 3usize.pow(k as u32 + 1) + 2;
        if p.facet_count() != expected_facets {
            return Err(format!(
                "tower stage {}: {} facets, expected {expected_facets}",
                k + 1,
                p.facet_count()
            ));
        }
        if !p.validate().map_err(core_err)?.is_smooth {
            return Err(format!("tower stage {} is not smooth", k + 1));
        }
    }
    if (p.vertex_count(), p.edge_count(), p.facet_count()) != (648, 972, 326) {
        return Err(format!(
            "stage-4 tower has ({}, {}, {}) faces, expected (648, 972, 326)",
            p.vertex_count(),
            p.edge_count(),
            p.facet_count()
        ));
    }

    // product laws: vertex counts multiply, facet counts add
    let stage1 = tower_polytope(1)?;
    let segment = make_box(&[int(730)]).map_err(core_err)?;
    let product = stage1.product(&segment).map_err(core_err)?;
    if product.vertex_count() != stage1.vertex_count() * 2 {
        return Err("product vertex count law fails".into());
    }
    if product.facet_count() != stage1.facet_count() + 2 {
        return Err("product facet count law fails".into());
    }
    if !product.validate().map_err(core_err)?.is_smooth {
        return Err("product of smooth factors is not smooth".into());
    }

    // chiseled cubes and the hexagon tower stage stay smooth
    for (label, q) in [
        (
            "chiseled square",
            make_box(&[int(3), int(3)])
                .map_err(core_err)?
                .chisel_all(&int(1))
                .map_err(core_err)?,
        ),
        ("hexagon tower stage 1", hex_tower_polytope(1)?),
    ] {
        let report = q.validate().map_err(core_err)?;
        if !report.is_smooth {
            return Err(format!("{label} is not smooth"));
        }
    }
    Ok("stage counts (648, 972, 326) and product laws verified".into())
}
