from ga3_bundles.main import main

main()
