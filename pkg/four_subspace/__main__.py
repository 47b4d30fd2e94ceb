from four_subspace.cli import main

raise SystemExit(main())
