#!/usr/bin/env python3
"""
Verify that the sigfour modules import and that the check catalog is complete.
Run this before the full test suite.
"""

import sys
from pathlib import Path

# Add project root to path
ROOT_DIR = Path(__file__).resolve().parent.parent
if str(ROOT_DIR) not in sys.path:
    sys.path.insert(0, str(ROOT_DIR))


def verify_imports():
    """Verify all modules can be imported and the catalog covers C1..C16."""
    print("Verifying sigfour imports...")
    print("=" * 60)

    for package in ("numpy", "mpmath", "pydantic"):
        try:
            __import__(package)
            print(f"✅ {package} is installed")
        except ImportError:
            print(f"❌ {package} not found")
            print("   Install it with: pip install -r requirements.txt")
            return False

    errors = []

    modules = [
        "sigfour.errors",
        "sigfour.numerics",
        "sigfour.hypergeom",
        "sigfour.realline",
        "sigfour.weierstrass",
        "sigfour.functions",
        "sigfour.report",
        "sigfour.certifier",
        "ui.cli",
    ]
    for module_path in modules:
        try:
            __import__(module_path)
            print(f"✅ {module_path} imported successfully")
        except Exception as e:
            print(f"❌ {module_path} import failed: {e}")
            errors.append(module_path)

    try:
        from sigfour.checks import CATALOG

        numbers = sorted({spec.number for spec in CATALOG})
        print(f"✅ check catalog imported: {len(CATALOG)} checks")
        print(f"   Families: {', '.join(f'C{n}' for n in numbers)}")
        missing = sorted(set(range(1, 17)) - set(numbers))
        if missing:
            print(f"❌ missing check families: {missing}")
            errors.append("catalog")
    except Exception as e:
        print(f"❌ check catalog import failed: {e}")
        errors.append("catalog")

    print("=" * 60)

    if errors:
        print(f"\n❌ {len(errors)} component(s) failed:")
        for error in errors:
            print(f"   - {error}")
        return False

    print("\n✅ All modules imported successfully!")
    print("\nYou can now run the tests:")
    print("   ./test/run_tests.sh")
    print("   or")
    print("   python -m ui.cli certify --format md")
    return True


if __name__ == "__main__":
    success = verify_imports()
    sys.exit(0 if success else 1)
