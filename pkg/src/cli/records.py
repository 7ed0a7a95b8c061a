import json
from dataclasses import asdict, dataclass, fields
from typing import Any, Dict, Mapping

from src.topology.components.laurent_poly import LaurentPoly
from src.topology.seifert import alexander, seifert_matrix_lens
from src.topology.witness import (
    LensSpace,
    SurfaceParams,
    WitnessCertificate,
    WitnessMethod,
    verify_witness,
)

_INTEGER_FIELDS = ("p", "q", "a", "b", "c", "u", "v", "epsilon", "k", "r_k", "s_k", "identity_value")


@dataclass(frozen=True)
class CertificateRecord:
    """Flat, serializable form of a witness certificate and its Alexander polynomial.

    On the wire every integer, including the polynomial coefficients, is a decimal string.
    """

    p: int
    q: int
    a: int
    b: int
    c: int
    u: int
    v: int
    epsilon: int
    k: int
    r_k: int
    s_k: int
    method: str
    alexander: Dict[int, int]
    identity_value: int

    @classmethod
    def from_certificate(cls, certificate: WitnessCertificate) -> "CertificateRecord":
        space, params = certificate.space, certificate.params
        poly = alexander(seifert_matrix_lens(space, params), space.p)
        return cls(
            p=space.p,
            q=space.q,
            a=params.a,
            b=params.b,
            c=params.c,
            u=params.u,
            v=params.v,
            epsilon=certificate.epsilon,
            k=certificate.k,
            r_k=certificate.r_k,
            s_k=certificate.s_k,
            method=certificate.method.value,
            alexander={e: int(c) for e, c in poly.items()},
            identity_value=certificate.identity_value,
        )

    @property
    def space(self) -> LensSpace:
        return LensSpace(self.p, self.q)

    @property
    def params(self) -> SurfaceParams:
        return SurfaceParams(self.a, self.b, self.c, self.u, self.v)

    @property
    def polynomial(self) -> LaurentPoly:
        return LaurentPoly(self.alexander)

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        for name in _INTEGER_FIELDS:
            data[name] = str(data[name])
        data["alexander"] = {str(e): str(c) for e, c in sorted(self.alexander.items())}
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "CertificateRecord":
        expected = {field.name for field in fields(cls)}
        if set(data) != expected:
            raise ValueError(f"Record keys {sorted(data)} differ from {sorted(expected)}")

        values = {name: int(data[name]) for name in _INTEGER_FIELDS}
        return cls(
            method=WitnessMethod(data["method"]).value,
            alexander={e: int(c) for e, c in LaurentPoly.from_json(data["alexander"]).items()},
            **values,
        )

    @classmethod
    def from_json(cls, line: str) -> "CertificateRecord":
        return cls.from_dict(json.loads(line))

    def reverify(self) -> bool:
        """Recomputes the identity value and the Alexander polynomial from the parameters."""
        certificate = verify_witness(self.space, self.params, WitnessMethod(self.method))
        if certificate is None:
            return False
        recomputed = CertificateRecord.from_certificate(certificate)
        return recomputed == self
