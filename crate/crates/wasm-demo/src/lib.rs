//! wasm-bindgen bindings for the static page in `www/`.

pub mod demo;

use wasm_bindgen::prelude::*;

use susypt::susy::PTParams;

fn js_err(msg: String) -> JsError {
    JsError::new(&msg)
}

/// A Pöschl-Teller well as seen from JavaScript.
#[wasm_bindgen]
pub struct Well {
    params: PTParams,
}

#[wasm_bindgen]
impl Well {
    #[wasm_bindgen(constructor)]
    pub fn new(alpha: f64, g: f64) -> Result<Well, JsError> {
        demo::params(alpha, g).map(|params| Well { params }).map_err(js_err)
    }

    #[wasm_bindgen(getter)]
    pub fn lambda(&self) -> f64 {
        self.params.lambda()
    }

    #[wasm_bindgen(getter, js_name = zetaBound)]
    pub fn zeta_bound(&self) -> f64 {
        demo::plus_bound(&self.params)
    }

    /// `kind` is "v", "partner" or "m"; NaN marks points off the domain.
    pub fn sample(
        &self,
        kind: &str,
        plus: bool,
        deformation: f64,
        x_min: f64,
        x_max: f64,
        n: usize,
    ) -> Result<Vec<f64>, JsError> {
        let kind = demo::Kind::parse(kind).map_err(js_err)?;
        let xs = demo::linspace(x_min, x_max, n);
        Ok(demo::sample(&self.params, kind, demo::config(plus, deformation), &xs))
    }

    #[wasm_bindgen(js_name = singularPoint)]
    pub fn singular_point(&self, plus: bool, deformation: f64) -> Option<f64> {
        demo::singular_x(&self.params, demo::config(plus, deformation))
    }

    pub fn levels(&self) -> Vec<f64> {
        susypt::susy::analytic_spectrum(&self.params).energies
    }

    #[wasm_bindgen(js_name = expectedPartnerLevels)]
    pub fn expected_partner_levels(&self, plus: bool) -> Vec<f64> {
        demo::expected_partner_levels(&self.params, plus)
    }

    #[wasm_bindgen(js_name = numericPartnerLevels)]
    pub fn numeric_partner_levels(&self, plus: bool, deformation: f64) -> Result<Vec<f64>, JsError> {
        demo::numeric_partner_levels(&self.params, demo::config(plus, deformation)).map_err(js_err)
    }
}

/// Regular part of the δ-well minus partner on a uniform grid.
#[wasm_bindgen(js_name = deltaRegular)]
pub fn delta_regular(g: f64, xi: f64, x_min: f64, x_max: f64, n: usize) -> Vec<f64> {
    demo::delta_regular(g, xi, &demo::linspace(x_min, x_max, n))
}
