use proptest::prelude::*;
use weak_contraction::dsl::{BinOp, Clause, CmpOp, Expr, Func, Guard, MapDef, Pred, SetExpr};
use weak_contraction::prelude::*;

fn finite_line_set() -> impl Strategy<Value = BoundedSet> {
    prop::collection::vec(-10.0..10.0f64, 1..8)
        .prop_map(|xs| BoundedSet::finite(xs.into_iter().map(Point::real).collect()).unwrap())
}

fn interval() -> impl Strategy<Value = BoundedSet> {
    (-10.0..10.0f64, 0.0..5.0f64).prop_map(|(lo, w)| BoundedSet::interval(lo, lo + w).unwrap())
}

fn line_set() -> impl Strategy<Value = BoundedSet> {
    prop_oneof![interval(), finite_line_set()]
}

fn plane_set() -> impl Strategy<Value = BoundedSet> {
    prop::collection::vec((-5.0..5.0f64, -5.0..5.0f64), 1..6)
        .prop_map(|ps| BoundedSet::finite(ps.into_iter().map(|(x, y)| Point::coords([x, y])).collect()).unwrap())
}

/// Brute-force `(D, δ)` over interval corners and finite members.
fn corner_oracle(a: &BoundedSet, b: &BoundedSet) -> (f64, f64) {
    let pts = |s: &BoundedSet| -> Vec<f64> {
        match s {
            BoundedSet::Interval { lo, hi } => vec![*lo, *hi],
            BoundedSet::Finite(ps) => ps.iter().map(|p| p.as_real().unwrap()).collect(),
        }
    };
    let (pa, pb) = (pts(a), pts(b));
    let mut sup: f64 = 0.0;
    let mut gap = f64::INFINITY;
    for x in &pa {
        for y in &pb {
            sup = sup.max((x - y).abs());
            gap = gap.min((x - y).abs());
        }
    }
    // An interval can also reach the other set from inside.
    let inside = |s: &BoundedSet, x: f64| matches!(s, BoundedSet::Interval { lo, hi } if *lo <= x && x <= *hi);
    if pa.iter().any(|x| inside(b, *x)) || pb.iter().any(|y| inside(a, *y)) {
        gap = 0.0;
    }
    (gap, sup)
}

proptest! {
    #[test]
    fn metric_axioms(
        p in prop::collection::vec(-1e3..1e3f64, 3),
        q in prop::collection::vec(-1e3..1e3f64, 3),
        r in prop::collection::vec(-1e3..1e3f64, 3),
    ) {
        for space in [MetricSpace::euclidean(3).unwrap(), MetricSpace::chebyshev(3).unwrap()] {
            let (p, q, r) = (Point::coords(p.clone()), Point::coords(q.clone()), Point::coords(r.clone()));
            let dpq = space.dist(&p, &q).unwrap();
            prop_assert!(dpq >= 0.0);
            prop_assert_eq!(space.dist(&p, &p).unwrap(), 0.0);
            prop_assert_eq!(dpq, space.dist(&q, &p).unwrap());
            let via = space.dist(&p, &r).unwrap() + space.dist(&r, &q).unwrap();
            prop_assert!(dpq <= via * (1.0 + 4.0 * f64::EPSILON), "{} > {}", dpq, via);
        }
    }

    #[test]
    fn line_functionals_match_corner_enumeration(a in line_set(), b in line_set()) {
        let line = MetricSpace::RealLine;
        let (gap, sup) = corner_oracle(&a, &b);
        prop_assert_eq!(line.gap(&a, &b).unwrap(), gap);
        prop_assert_eq!(line.sup_dist(&a, &b).unwrap(), sup);
    }

    #[test]
    fn sup_distance_dominates_gap_and_is_symmetric(a in line_set(), b in line_set()) {
        let line = MetricSpace::RealLine;
        let (gap, sup) = (line.gap(&a, &b).unwrap(), line.sup_dist(&a, &b).unwrap());
        prop_assert!(0.0 <= gap && gap <= sup);
        prop_assert_eq!(gap, line.gap(&b, &a).unwrap());
        prop_assert_eq!(sup, line.sup_dist(&b, &a).unwrap());
    }

    #[test]
    fn sup_distance_triangle(a in plane_set(), b in plane_set(), c in plane_set()) {
        let plane = MetricSpace::euclidean(2).unwrap();
        let ab = plane.sup_dist(&a, &b).unwrap();
        let via = plane.sup_dist(&a, &c).unwrap() + plane.sup_dist(&c, &b).unwrap();
        prop_assert!(ab <= via + 1e-12);
        prop_assert!(plane.gap(&a, &b).unwrap() <= ab);
    }

    #[test]
    fn sup_distance_vanishes_only_on_equal_singletons(x in -5.0..5.0f64, w in 0.0..1.0f64) {
        let line = MetricSpace::RealLine;
        let s = BoundedSet::real_singleton(x).unwrap();
        prop_assert_eq!(line.sup_dist(&s, &s).unwrap(), 0.0);
        let i = BoundedSet::interval(x, x + w).unwrap();
        prop_assert_eq!(line.sup_dist(&i, &i).unwrap(), (x + w) - x);
    }

    #[test]
    fn monte_carlo_never_exceeds_closed_form(a in line_set(), b in line_set(), seed in any::<u64>()) {
        let line = MetricSpace::RealLine;
        prop_assert!(line.sup_dist_oracle(&a, &b, 200, seed).unwrap() <= line.sup_dist(&a, &b).unwrap());
        prop_assert!(line.gap_oracle(&a, &b, 200, seed).unwrap() >= line.gap(&a, &b).unwrap());
    }

    #[test]
    fn dsl_print_parse_round_trip(def in map_def()) {
        let text = def.to_string();
        let back: MapDef = text.parse().map_err(|e| TestCaseError::fail(format!("{text}: {e}")))?;
        prop_assert_eq!(&back, &def, "{}", text);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn selections_stay_in_the_image(x0 in 0.0..1.0f64, seed in any::<u64>()) {
        let pair = MapPair::new(
            MetricSpace::RealLine,
            interval_map(|x| (x / 4.0, x / 2.0)),
            interval_map(|x| (0.0, x / 5.0)),
        );
        let opts = SolveOptions { strategy: SelectionStrategy::Random { seed }, max_iter: 40, ..Default::default() };
        let trace = iterate(&pair, &Point::real(x0), &opts).unwrap();
        for n in 0..trace.iterates.len() - 1 {
            let image = if n % 2 == 0 { pair.image_t(&trace.iterates[n]) } else { pair.image_s(&trace.iterates[n]) };
            prop_assert!(image.unwrap().contains(&trace.iterates[n + 1]));
        }
        prop_assert!(check_monotone(&trace).0);
    }
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![Just(Expr::Var), (0u32..2000).prop_map(|n| Expr::Num(n as f64 / 8.0)),];
    leaf.prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            (
                prop_oneof![Just(BinOp::Add), Just(BinOp::Sub), Just(BinOp::Mul), Just(BinOp::Div)],
                inner.clone(),
                inner.clone()
            )
                .prop_map(|(op, a, b)| Expr::Bin(op, Box::new(a), Box::new(b))),
            (
                prop_oneof![Just(Func::Min), Just(Func::Max)],
                inner.clone(),
                inner.clone()
            )
                .prop_map(|(f, a, b)| Expr::Call(f, vec![a, b])),
            inner.prop_map(|e| Expr::Call(Func::Abs, vec![e])),
        ]
    })
}

fn pred() -> impl Strategy<Value = Pred> {
    let cmp = prop_oneof![
        Just(CmpOp::Eq),
        Just(CmpOp::Ne),
        Just(CmpOp::Lt),
        Just(CmpOp::Le),
        Just(CmpOp::Gt),
        Just(CmpOp::Ge)
    ];
    let leaf = (cmp, expr(), expr()).prop_map(|(op, a, b)| Pred::Cmp(op, a, b));
    leaf.prop_recursive(3, 8, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|p| Pred::Not(Box::new(p))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Pred::And(Box::new(a), Box::new(b))),
            (inner.clone(), inner).prop_map(|(a, b)| Pred::Or(Box::new(a), Box::new(b))),
        ]
    })
}

fn set_expr() -> impl Strategy<Value = SetExpr> {
    prop_oneof![
        (expr(), expr()).prop_map(|(a, b)| SetExpr::Interval(a, b)),
        expr().prop_map(SetExpr::Singleton),
    ]
}

fn map_def() -> impl Strategy<Value = MapDef> {
    (
        prop::collection::vec((pred(), set_expr()), 0..3),
        prop::option::of(set_expr()),
    )
        .prop_map(|(guarded, last)| {
            let mut clauses: Vec<Clause> = guarded
                .into_iter()
                .map(|(p, image)| Clause {
                    guard: Guard::If(p),
                    image,
                })
                .collect();
            match last {
                Some(image) => clauses.push(Clause {
                    guard: Guard::Otherwise,
                    image,
                }),
                None if clauses.is_empty() => clauses.push(Clause {
                    guard: Guard::Otherwise,
                    image: SetExpr::Singleton(Expr::Var),
                }),
                None => {}
            }
            MapDef { clauses }
        })
}
