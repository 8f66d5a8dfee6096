macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        #[path = $file]
        mod $module;

        #[test]
        fn $module() {
            $module::run_example().expect("example runs");
        }
    };
}

example!(normal_forms, "../examples/normal_forms.rs");
example!(cone_geometry, "../examples/cone_geometry.rs");
example!(fan_hypotheses, "../examples/fan_hypotheses.rs");
example!(cox_construction, "../examples/cox_construction.rs");
example!(lifting_subtori, "../examples/lifting_subtori.rs");
example!(diagonal_quotients, "../examples/diagonal_quotients.rs");
example!(
    torus_action_pipeline,
    "../examples/torus_action_pipeline.rs"
);
