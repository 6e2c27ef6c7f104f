//! Every example must run to completion.

macro_rules! run_example {
    ($name:ident) => {
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));

            #[test]
            fn runs() {
                main();
            }
        }
    };
}

run_example!(boundary_basics);
run_example!(exit_times);
run_example!(dirichlet_eigenvalue);
run_example!(hardy_weights);
run_example!(max_principle);
run_example!(hot_spots);
run_example!(energy_maximizers);
run_example!(graph6_io);
run_example!(corpus_scan);
