import unittest
from unittest.mock import MagicMock, patch

from modules.core.services.errors import SizeLimitError, UnsupportedIdentityError
from modules.identity import (
    IdentityId,
    Method,
    get_identity,
    load_catalog,
    lucas_via_fibonacci,
    verify,
    verify_by_genfun,
    verify_by_telescoping,
    verify_by_tilings,
    verify_direct,
)
from modules.sequences import lucas
from tests.isolation import isolate_settings

_restore_settings = None


def setUpModule():
    global _restore_settings
    _restore_settings = isolate_settings()


def tearDownModule():
    _restore_settings()


class CatalogTests(unittest.TestCase):
    def test_all_families_loaded_in_order(self):
        catalog = load_catalog()
        self.assertEqual(
            list(catalog),
            [IdentityId.SURY, IdentityId.THEOREM2, IdentityId.GENERAL, IdentityId.ALTERNATING, IdentityId.COROLLARY],
        )

    def test_metadata_from_frontmatter(self):
        sury = get_identity("sury")
        self.assertEqual(sury.fixed_m, 2)
        self.assertEqual(sury.reduces_to, (IdentityId.GENERAL, 2))
        self.assertIn(Method.TILINGS, sury.methods)
        self.assertTrue(sury.statement)
        alternating = get_identity(IdentityId.ALTERNATING)
        self.assertTrue(alternating.alternating)
        self.assertFalse(alternating.supports(Method.TILINGS))
        self.assertEqual(alternating.describe()["m"], ">= 2")
        self.assertEqual(sury.describe()["m"], 2)

    def test_parameter_checks(self):
        with self.assertRaises(UnsupportedIdentityError):
            get_identity("pythagoras")
        with self.assertRaises(UnsupportedIdentityError):
            get_identity("general").resolve_m(None)
        with self.assertRaises(UnsupportedIdentityError):
            get_identity("general").resolve_m(1)
        with self.assertRaises(UnsupportedIdentityError) as ctx:
            get_identity("sury").resolve_m(3)
        self.assertIn("--m", str(ctx.exception))
        self.assertEqual(get_identity("theorem2").resolve_m(None), 3)

    def test_lucas_rewrite(self):
        self.assertEqual([lucas_via_fibonacci(i) for i in range(30)], [lucas(i) for i in range(30)])

    def test_reductions_term_by_term(self):
        for identity in (IdentityId.SURY, IdentityId.THEOREM2, IdentityId.COROLLARY):
            entry = get_identity(identity)
            target, m = entry.reduces_to
            reduced = get_identity(target)
            for n in range(30):
                self.assertEqual(
                    [entry.term(k, n, m) for k in range(n + 1)],
                    [reduced.term(k, n, m) for k in range(n + 1)],
                )
                self.assertEqual(entry.rhs(n, m), reduced.rhs(n, m))


class DirectVerificationTests(unittest.TestCase):
    def test_hand_examples(self):
        self.assertEqual(verify_direct("sury", 3).rows[3].lhs, 48)
        self.assertEqual(verify_direct("theorem2", 3).rows[3].lhs, 243)
        row = verify_direct("general", 1, 4).rows[1]
        self.assertEqual((row.lhs, row.rhs), (16, 16))

    def test_all_families_to_200(self):
        for identity in (IdentityId.SURY, IdentityId.THEOREM2, IdentityId.COROLLARY):
            self.assertTrue(verify_direct(identity, 200).passed)
        for m in range(2, 11):
            self.assertTrue(verify_direct("general", 200, m).passed, msg=f"general m={m}")
            self.assertTrue(verify_direct("alternating", 200, m).passed, msg=f"alternating m={m}")

    def test_report_json_uses_decimal_strings(self):
        payload = verify_direct("sury", 60).to_dict()
        self.assertEqual(payload["verdict"], "pass")
        self.assertEqual(payload["n_range"], [0, 60])
        self.assertIsInstance(payload["rows"][60]["lhs"], str)
        self.assertEqual(payload["rows"][60]["lhs"], str(2**61 * 2504730781961))

    def test_negative_range_rejected(self):
        with self.assertRaises(ValueError):
            verify_direct("sury", -1)


class GenfunVerificationTests(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(verify_by_genfun("general", 3, 3).rows[3].lhs, 243)
        self.assertEqual(verify_by_genfun("alternating", 2, 2).rows[2].lhs, 2)
        row = verify_by_genfun("corollary", 0).rows[0]
        self.assertEqual((row.lhs, row.rhs), (1, 1))

    def test_agrees_with_direct(self):
        for identity, m in (("sury", None), ("theorem2", None), ("corollary", None), ("general", 7), ("alternating", 5)):
            direct = verify_direct(identity, 80, m)
            genfun = verify_by_genfun(identity, 80, m)
            self.assertTrue(genfun.passed)
            self.assertEqual(direct.rows, genfun.rows)


class TilingVerificationTests(unittest.TestCase):
    def test_sury_count(self):
        report = verify_by_tilings("sury", 4)
        self.assertTrue(report.passed)
        self.assertEqual(report.rows[4].lhs, 160)

    def test_theorem2_object_balance(self):
        report = verify_by_tilings("theorem2", 3)
        self.assertTrue(report.passed)
        self.assertEqual(report.details["balance"][3]["twice_boards"], "162")
        self.assertEqual(report.rows[3].lhs, 243)

    def test_general_single_term(self):
        row = verify_by_tilings("general", 0, 5).rows[0]
        self.assertEqual((row.lhs, row.rhs), (5, 5))

    def test_agrees_with_direct_where_feasible(self):
        for identity, n_max, m in (("sury", 10, None), ("theorem2", 7, None), ("general", 5, 4)):
            self.assertEqual(verify_by_tilings(identity, n_max, m).rows, verify_direct(identity, n_max, m).rows)

    def test_alternating_families_have_no_tiling_model(self):
        for identity in ("alternating", "corollary"):
            with self.assertRaises(UnsupportedIdentityError):
                verify_by_tilings(identity, 3, 2)

    def test_cap_propagates(self):
        with self.assertRaises(SizeLimitError):
            verify_by_tilings("sury", 6, cap=100)


class TelescopingVerificationTests(unittest.TestCase):
    def test_every_family(self):
        for identity, m in (("sury", None), ("theorem2", None), ("general", 6), ("alternating", 4), ("corollary", None)):
            report = verify_by_telescoping(identity, 60, m)
            self.assertTrue(report.passed, msg=f"{identity}: {report.failed_checks}")
            self.assertEqual(report.rows, verify_direct(identity, 60, m).rows)

    def test_step_weight_recorded(self):
        self.assertEqual(verify_by_telescoping("alternating", 3, 5).details["step_weight"], 5)
        self.assertEqual(verify_by_telescoping("general", 3, 5).details["step_weight"], 1)


class DispatchTests(unittest.TestCase):
    def test_unknown_method(self):
        with self.assertRaises(UnsupportedIdentityError):
            verify("sury", 3, method="guess")

    def test_certificate_method(self):
        settings = MagicMock(certificate_order_bound=8)
        with patch("modules.identity.certificate.get_settings", return_value=settings):
            report = verify("general", 20, 3, "certificate")
        self.assertTrue(report.passed)
        self.assertEqual(report.details["certificate"]["bound"], 8)
        self.assertEqual(report.rows, verify_direct("general", 20, 3).rows)

    def test_methods_share_tables(self):
        tables = {method: verify("corollary", 25, method=method).rows for method in ("direct", "genfun", "telescoping")}
        self.assertEqual(tables["direct"], tables["genfun"])
        self.assertEqual(tables["direct"], tables["telescoping"])


if __name__ == "__main__":
    unittest.main()
