pub fn placeholder() -> f64 { 1.0 }
