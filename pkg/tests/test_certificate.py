import unittest
from unittest.mock import MagicMock, patch

from modules.core.services.errors import CertificateRefusedError, UnsupportedIdentityError
from modules.identity import IdentityId, certify_cfinite, cfinite_sides, get_identity
from modules.sequences import FIBONACCI


class CertificateTests(unittest.TestCase):
    def setUp(self):
        self.settings = MagicMock(certificate_order_bound=8)
        self.patcher = patch("modules.identity.certificate.get_settings", return_value=self.settings)
        self.patcher.start()

    def tearDown(self):
        self.patcher.stop()

    def _families(self):
        yield IdentityId.SURY, None
        yield IdentityId.THEOREM2, None
        yield IdentityId.COROLLARY, None
        for m in range(2, 11):
            yield IdentityId.GENERAL, m
            yield IdentityId.ALTERNATING, m

    def test_sury_certificate(self):
        certificate = certify_cfinite("sury")
        self.assertEqual(certificate.bound, 8)
        self.assertEqual(certificate.differences, (0,) * 9)
        self.assertEqual(certificate.verified_range, (0, 8))

    def test_all_families_certify(self):
        for identity, m in self._families():
            certificate = certify_cfinite(identity, m)
            self.assertLessEqual(certificate.closure_order, certificate.bound)
            self.assertTrue(all(value == 0 for value in certificate.differences))

    def test_sides_reproduce_catalog_values(self):
        for identity, m in self._families():
            entry = get_identity(identity)
            m = entry.resolve_m(m)
            lhs, rhs = cfinite_sides(entry, m)
            self.assertEqual(lhs.terms(25), [entry.lhs(n, m) for n in range(25)])
            self.assertEqual(rhs.terms(25), [entry.rhs(n, m) for n in range(25)])

    def test_bound_follows_closure_order_when_static_bound_is_small(self):
        certificate = certify_cfinite("general", 7, static_bound=2)
        self.assertEqual(certificate.bound, certificate.closure_order)
        self.assertEqual(len(certificate.differences), certificate.closure_order + 1)

    def test_settings_bound_is_used(self):
        self.settings.certificate_order_bound = 12
        self.assertEqual(certify_cfinite("theorem2").bound, 12)

    def test_shifted_rhs_is_refused_with_witness(self):
        # m^(n+1) F(n) instead of m^(n+1) F(n+1)
        perturbed = FIBONACCI.geometric(7).scale(7)
        with self.assertRaises(CertificateRefusedError) as ctx:
            certify_cfinite("general", 7, rhs_override=perturbed)
        self.assertEqual(ctx.exception.witness, 0)
        self.assertEqual(ctx.exception.difference, 7)

    def test_sign_flipped_rhs_refused_for_every_family(self):
        for identity, m in self._families():
            entry = get_identity(identity)
            _, rhs = cfinite_sides(entry, entry.resolve_m(m))
            with self.assertRaises(CertificateRefusedError):
                certify_cfinite(identity, m, rhs_override=-rhs)

    def test_late_perturbation_found(self):
        _, rhs = cfinite_sides(get_identity("sury"), 2)
        with self.assertRaises(CertificateRefusedError) as ctx:
            certify_cfinite("sury", rhs_override=rhs + FIBONACCI)
        self.assertEqual(ctx.exception.witness, 1)

    def test_fixed_m_mismatch(self):
        with self.assertRaises(UnsupportedIdentityError):
            certify_cfinite("corollary", 3)

    def test_serialises(self):
        payload = certify_cfinite("alternating", 4).to_dict()
        self.assertEqual(payload["identity"], "alternating")
        self.assertEqual(payload["differences"], ["0"] * (payload["bound"] + 1))


if __name__ == "__main__":
    unittest.main()
