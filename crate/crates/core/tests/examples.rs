//! Every example runs to completion.

mod diagrams {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/diagrams.rs"));

    #[test]
    fn runs() {
        main();
    }
}

mod relations {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/relations.rs"));

    #[test]
    fn runs() {
        main();
    }
}

mod specht {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/specht.rs"));

    #[test]
    fn runs() {
        main();
    }
}

mod cells {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cells.rs"));

    #[test]
    fn runs() {
        main();
    }
}

mod murphy {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/murphy.rs"));

    #[test]
    fn runs() {
        main();
    }
}

mod decomposition {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/decomposition.rs"));

    #[test]
    fn runs() {
        main();
    }
}

mod double_centralizer {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/double_centralizer.rs"));

    #[test]
    fn runs() {
        main();
    }
}

mod tensor_space {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/tensor_space.rs"));

    #[test]
    fn runs() {
        main();
    }
}
