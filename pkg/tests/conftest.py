def pytest_addoption(parser):
    parser.addoption(
        "--full",
        action="store_true",
        default=False,
        help="run the exhaustive 128^3 associativity sweep instead of the "
             "seeded sample",
    )
