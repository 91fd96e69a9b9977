//! WebAssembly bindings for the browser demo in `www/`.

mod demo;

use wasm_bindgen::prelude::*;

pub use demo::{scan, Demo};

#[wasm_bindgen]
pub struct AntDemo {
    inner: Demo,
    width: u32,
    height: u32,
}

#[wasm_bindgen]
impl AntDemo {
    #[wasm_bindgen(constructor)]
    pub fn new(rule: &str) -> Result<AntDemo, JsError> {
        let inner = Demo::new(rule).map_err(|e| JsError::new(&e))?;
        Ok(AntDemo {
            inner,
            width: 0,
            height: 0,
        })
    }

    pub fn step(&mut self, n: u32) {
        self.inner.step(n);
    }

    #[wasm_bindgen(js_name = nextHome)]
    pub fn next_home(&mut self, cap: u32) -> bool {
        self.inner.next_home(cap)
    }

    pub fn time(&self) -> f64 {
        self.inner.universe().time() as f64
    }

    #[wasm_bindgen(js_name = isHome)]
    pub fn is_home(&self) -> bool {
        self.inner.universe().is_home()
    }

    /// RGBA bytes of the state picture; read `width`/`height` afterwards.
    pub fn pixels(&mut self, scale: u32) -> Vec<u8> {
        match self.inner.raster(scale) {
            Some(p) => {
                self.width = p.width;
                self.height = p.height;
                p.to_rgba()
            }
            None => {
                self.width = 0;
                self.height = 0;
                Vec::new()
            }
        }
    }

    #[wasm_bindgen(getter)]
    pub fn width(&self) -> u32 {
        self.width
    }

    #[wasm_bindgen(getter)]
    pub fn height(&self) -> u32 {
        self.height
    }

    #[wasm_bindgen(js_name = truchetSvg)]
    pub fn truchet_svg(&self, diagonals: bool, highlight: bool) -> Result<String, JsError> {
        self.inner
            .truchet_svg(diagonals, highlight)
            .map_err(|e| JsError::new(&e))
    }

    pub fn symmetries(&self) -> String {
        self.inner.symmetries()
    }

    #[wasm_bindgen(js_name = contourSummary)]
    pub fn contour_summary(&self) -> String {
        self.inner.contour_summary()
    }
}

#[wasm_bindgen(js_name = symmetryScan)]
pub fn symmetry_scan(rule: &str, horizon: u32, on_return: bool) -> Result<String, JsError> {
    scan(rule, horizon, on_return).map_err(|e| JsError::new(&e))
}
