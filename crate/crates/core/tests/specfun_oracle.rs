use approx::assert_relative_eq;
use proptest::prelude::*;
use susypt::specfun::{gamma, gauss_2f1, gauss_2f1_asymptotic, ln_gamma, HypergeomTriple};

/// (a, b, c, z, ₂F₁(a, b; c; z)) from mpmath at 40 digits.
const HYP2F1_TABLE: &[(f64, f64, f64, f64, f64)] = &[
    (1.216, 2.432, 2.216, -0.0067379469990854670966, 0.99107912698713237727),
    (-0.216, -0.432, 0.784, -0.0067379469990854670966, 0.99919871967872083406),
    (1.216, 2.432, 2.216, -0.44932896411722159143, 0.61112982401149939299),
    (-0.216, -0.432, 0.784, -0.44932896411722159143, 0.94914521577674892163),
    (1.216, 2.432, 2.216, -1.8221188003905089749, 0.25593607405817440708),
    (-0.216, -0.432, 0.784, -1.8221188003905089749, 0.81554393897630955916),
    (1.216, 2.432, 2.216, -29.964100047397013348, 0.012577490922058814609),
    (-0.216, -0.432, 0.784, -29.964100047397013348, -0.60696202484612354015),
    (1.216, 2.432, 2.216, -403.42879349273512261, 0.00054269274857162040967),
    (-0.216, -0.432, 0.784, -403.42879349273512261, -6.8298106000816546194),
    (2.5616, 5.1232, 3.5616, -0.0067379469990854670966, 0.97556708249228125227),
    (-1.5616, -3.1232, -0.5616, -0.0067379469990854670966, 1.0579787899086308302),
    (2.5616, 5.1232, 3.5616, -0.44932896411722159143, 0.26144699954656234806),
    (-1.5616, -3.1232, -0.5616, -0.44932896411722159143, 2.3945170400361358584),
    (2.5616, 5.1232, 3.5616, -1.8221188003905089749, 0.027179538639772784249),
    (-1.5616, -3.1232, -0.5616, -1.8221188003905089749, -30.766411752400427552),
    (2.5616, 5.1232, 3.5616, -29.964100047397013348, 0.000028174333979870490199),
    (-1.5616, -3.1232, -0.5616, -29.964100047397013348, -53627.501797878738442),
    (2.5616, 5.1232, 3.5616, -403.42879349273512261, 3.612054061032353306e-8),
    (-1.5616, -3.1232, -0.5616, -403.42879349273512261, -140541110.84885503603),
    (3.3, 6.6, 4.3, -0.0067379469990854670966, 0.96656911197259009166),
    (-2.3, -4.6, -1.3, -0.0067379469990854670966, 1.0577112893807311331),
    (3.3, 6.6, 4.3, -0.44932896411722159143, 0.15862399760762324898),
    (-2.3, -4.6, -1.3, -0.44932896411722159143, 15.170700156321634649),
    (3.3, 6.6, 4.3, -1.8221188003905089749, 0.0073234029782838640199),
    (-2.3, -4.6, -1.3, -1.8221188003905089749, 35.66442081010895279),
    (3.3, 6.6, 4.3, -29.964100047397013348, 9.2384166778560747529e-7),
    (-2.3, -4.6, -1.3, -29.964100047397013348, -8092884.9455563952915),
    (3.3, 6.6, 4.3, -403.42879349273512261, 1.7354911603300977305e-10),
    (-2.3, -4.6, -1.3, -403.42879349273512261, -989301544599.82022027),
    (1.5, 3.0, 2.5, -0.0067379469990854670966, 0.98798742676898562084),
    (1.5, 3.0, 2.5, -0.44932896411722159143, 0.51644392899239774179),
    (1.5, 3.0, 2.5, -1.8221188003905089749, 0.16352278309728025698),
    (1.5, 3.0, 2.5, -29.964100047397013348, 0.0035562407073523169026),
    (1.5, 3.0, 2.5, -403.42879349273512261, 0.000072679212839011094581),
    (4.75, 9.5, 5.75, -0.0067379469990854670966, 0.94867998748136623165),
    (-3.75, -7.5, -2.75, -0.0067379469990854670966, 1.0713489514606861966),
    (4.75, 9.5, 5.75, -0.44932896411722159143, 0.057698556836168887133),
    (-3.75, -7.5, -2.75, -0.44932896411722159143, 3.5233779041317189735),
    (4.75, 9.5, 5.75, -1.8221188003905089749, 0.00051603171140329563522),
    (-3.75, -7.5, -2.75, -1.8221188003905089749, -10044.142130138435231),
    (4.75, 9.5, 5.75, -29.964100047397013348, 1.0610012464290057494e-9),
    (-3.75, -7.5, -2.75, -29.964100047397013348, -167430698200.79616927),
    (4.75, 9.5, 5.75, -403.42879349273512261, 4.5939050200639442196e-15),
    (-3.75, -7.5, -2.75, -403.42879349273512261, -35831221663343980605.0),
    (0.5, 4.7, 1.5, -10000.0, 0.0044546716121397729436),
    (0.3, 1.7, 2.2, -50.0, 0.34199281324669803348),
    (-3.0, 2.5, 1.25, -7.5, 2388.3076923076923077),
    (1.0, 1.0, 2.0, -0.9, 0.71317098463599419555),
    (0.5, 2.0625, 0.5, -0.3, 0.58209227514200521864),
];

#[test]
fn hyp2f1_matches_mpmath_table() {
    for &(a, b, c, z, want) in HYP2F1_TABLE {
        let got = gauss_2f1(HypergeomTriple::new(a, b, c), z).unwrap();
        assert_relative_eq!(got, want, max_relative = 1e-10);
    }
}

#[test]
fn hyp2f1_elementary_cases() {
    // 2F1(1, 1; 2; z) = ln(1 - z)/(-z)
    for z in [-0.1, -0.7, -3.0, -250.0] {
        let got = gauss_2f1(HypergeomTriple::new(1.0, 1.0, 2.0), z).unwrap();
        assert_relative_eq!(got, (-z).ln_1p() / -z, max_relative = 1e-12);
    }
    // 2F1(a, b; b; z) = (1 - z)^(-a)
    for z in [-0.2f64, -5.0, -1e3] {
        let got = gauss_2f1(HypergeomTriple::new(0.7, 2.3, 2.3), z).unwrap();
        assert_relative_eq!(got, (1.0 - z).powf(-0.7), max_relative = 1e-12);
    }
}

#[test]
fn hyp2f1_domain() {
    assert!(gauss_2f1(HypergeomTriple::new(1.0, 1.0, 2.0), 0.5).is_err());
    assert!(gauss_2f1(HypergeomTriple::new(1.0, 1.0, -2.0), -0.5).is_err());
    assert_eq!(gauss_2f1(HypergeomTriple::new(1.0, 1.0, 2.0), 0.0).unwrap(), 1.0);
}

#[test]
fn gamma_matches_mpmath() {
    for (x, want) in [
        (0.1, 9.51350769866873128580797989582),
        (0.5, 1.77245385090551602729816748334),
        (2.5, 1.32934038817913702047362561251),
        (7.3, 1271.42363366390883991787432614),
        (-0.5, -3.54490770181103205459633496668),
        (-2.7, -0.931082784838963965458595939287),
    ] {
        assert_relative_eq!(gamma(x).unwrap(), want, max_relative = 1e-13);
    }
    assert!(gamma(-3.0).is_err());
}

#[test]
fn asymptotic_form_approaches_function() {
    let t = HypergeomTriple::new(1.216, 2.432, 2.216);
    let mut last = f64::INFINITY;
    for z in [-1e2, -1e4, -1e6] {
        let exact = gauss_2f1(t, z).unwrap();
        let rel = ((gauss_2f1_asymptotic(t, z).unwrap() - exact) / exact).abs();
        assert!(rel < last);
        last = rel;
    }
    assert!(last < 1e-5);
}

proptest! {
    #[test]
    fn hyp2f1_symmetric_in_a_b(a in 0.1f64..5.0, b in 0.1f64..5.0, c in 0.6f64..6.0, lz in -6.0f64..6.0) {
        let z = -lz.exp();
        let t = HypergeomTriple::new(a, b, c);
        let f = gauss_2f1(t, z);
        let g = gauss_2f1(t.swapped(), z);
        if let (Ok(f), Ok(g)) = (f, g) {
            prop_assert!((f - g).abs() <= 1e-9 * f.abs().max(1e-300));
        }
    }

    #[test]
    fn hyp2f1_euler_transform(a in 0.1f64..3.0, b in 0.1f64..3.0, c in 0.6f64..4.0, z in -0.95f64..-0.05) {
        // 2F1(a, b; c; z) = (1 - z)^(c - a - b) 2F1(c - a, c - b; c; z)
        let lhs = gauss_2f1(HypergeomTriple::new(a, b, c), z).unwrap();
        let rhs = (1.0 - z).powf(c - a - b) * gauss_2f1(HypergeomTriple::new(c - a, c - b, c), z).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-10 * lhs.abs().max(1e-12));
    }

    #[test]
    fn ln_gamma_recurrence(x in 0.05f64..60.0) {
        let lhs = ln_gamma(x + 1.0).unwrap();
        let rhs = ln_gamma(x).unwrap() + x.ln();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1.0));
    }
}
