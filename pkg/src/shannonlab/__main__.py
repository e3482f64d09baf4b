"""Allow ``python -m shannonlab`` to run the experiment harness."""

from shannonlab.harness.cli import main

if __name__ == "__main__":
    raise SystemExit(main())
