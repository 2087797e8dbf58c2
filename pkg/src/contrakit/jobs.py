"""Job files: loading, building the objects they describe, running checks."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from . import contraction as ct
from . import hopf as hp
from . import liecon as lc
from .coeff import field_make
from .errors import ValidationError
from .ideals import COUNTERS
from .poly import order_from_name
from .presentations import FPAlgebra, validate_involution

PROPERTIES = (
    "flat",
    "fiber0",
    "unit_fiber",
    "descent",
    "rees",
    "localize",
    "double",
    "tensor",
    "hopf",
    "cartan",
    "embedding",
    "lie",
    "action",
    # additional checks
    "trivial",
    "witness",
    "gluing",
    "base_change",
    "surjection",
    "lie_of_group",
)


def corpus_names():
    root = resources.files("contrakit") / "corpus"
    return sorted(p.name[: -len(".job")] for p in root.iterdir() if p.name.endswith(".job"))


def corpus_path(name):
    return resources.files("contrakit") / "corpus" / f"{name}.job"


def read_job(ref):
    """Job dict from a path, a corpus name or an already parsed dict."""
    if isinstance(ref, dict):
        return dict(ref)
    p = Path(ref)
    if p.exists():
        text = p.read_text()
        default_name = p.stem
    else:
        cp = corpus_path(str(ref))
        if not cp.is_file():
            raise ValidationError(f"no job file or corpus entry named {ref!r}")
        text = cp.read_text()
        default_name = str(ref)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"job {ref!r} is not valid JSON: {exc}") from None
    data.setdefault("name", default_name)
    return data


_KNOWN_KEYS = {
    "name",
    "description",
    "field",
    "vars",
    "relations",
    "involution",
    "involution2",
    "gen_names",
    "hopf",
    "lie",
    "action",
    "params",
    "props",
}


class Job:
    """Lazily built objects of a job description."""

    def __init__(self, data, raw_4lambda=False):
        unknown = set(data) - _KNOWN_KEYS
        if unknown:
            raise ValidationError(f"unknown job fields {sorted(unknown)}")
        self.data = data
        self.name = data.get("name", "job")
        self.raw_4lambda = raw_4lambda
        self.field = field_make(data.get("field", "QQ"))
        self.params = data.get("params", {})
        self._cache = {}

    # -- building -----------------------------------------------------------------

    @property
    def has_algebra(self):
        return "vars" in self.data

    def _get(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    @property
    def A(self):
        def build():
            if not self.has_algebra:
                raise ValidationError(f"job {self.name!r} has no algebra")
            vars_ = self.data["vars"]
            if not isinstance(vars_, list) or not all(isinstance(v, str) for v in vars_):
                raise ValidationError("'vars' must be a list of names")
            return FPAlgebra(self.field, vars_, self.data.get("relations", []))

        return self._get("A", build)

    def _involution(self, key):
        A = self.A
        images = self.data.get(key)
        if images is None:
            images = {v: v for v in A.vars}
        missing = [v for v in A.vars if v not in images]
        if missing:
            raise ValidationError(f"{key} has no image for {missing}")
        extra = [v for v in images if v not in A.vars]
        if extra:
            raise ValidationError(f"{key} mentions undeclared variables {extra}")
        return validate_involution(A, images)

    @property
    def theta(self):
        return self._get("theta", lambda: self._involution("involution"))

    @property
    def eta(self):
        return self._get("eta", lambda: self._involution("involution2"))

    @property
    def C(self):
        def build():
            names = self.data.get("gen_names", {})
            return ct.contract(
                self.A,
                self.theta,
                raw_4lambda=self.raw_4lambda,
                plus_names=names.get("plus"),
                minus_names=names.get("minus"),
            )

        return self._get("C", build)

    @property
    def Cn(self):
        """Normalized presentation (the checks need it even under --raw-4lambda)."""
        if not self.raw_4lambda:
            return self.C

        def build():
            names = self.data.get("gen_names", {})
            return ct.contract(self.A, self.theta, plus_names=names.get("plus"), minus_names=names.get("minus"))

        return self._get("Cn", build)

    @property
    def H(self):
        def build():
            h = self.data.get("hopf")
            if h is None:
                raise ValidationError(f"job {self.name!r} has no Hopf data")
            return hp.HopfData(self.A, h["comul"], h["counit"], h["antipode"])

        return self._get("H", build)

    @property
    def CH(self):
        return self._get("CH", lambda: hp.contract_hopf(self.H, self.theta, C=self.Cn))

    @property
    def L(self):
        def build():
            lie = self.data.get("lie")
            if lie is None:
                raise ValidationError(f"job {self.name!r} has no Lie data")
            return lc.LieData.from_brackets(self.field, lie["basis"], lie.get("brackets", {}), lie["theta"])

        return self._get("L", build)

    @property
    def lie_names(self):
        return self.data.get("lie", {}).get("adapted_names")

    @property
    def action(self):
        def build():
            act = self.data.get("action")
            if act is None:
                raise ValidationError(f"job {self.name!r} has no action")
            if "matrices" in act:
                mat = self.data.get("hopf", {}).get("matrix") or act.get("matrix")
                return lc.matrix_action(self.L, self.A, mat, self.theta, act["matrices"])
            return lc.DerivationAction(self.L, self.A, self.theta, act["derivations"])

        return self._get("action", build)

    def partner(self):
        ref = self.params.get("partner")
        if ref is None:
            return self
        if isinstance(ref, str) and ref == self.name:
            return self
        return Job(read_job(ref))

    # -- checks ---------------------------------------------------------------------

    def check(self, prop):
        p = self.params
        if prop == "flat":
            return ct.flatness_check(self.Cn)
        if prop == "fiber0":
            return ct.graded_fiber_check(self.Cn)
        if prop == "unit_fiber":
            return ct.unit_fiber_iso(self.Cn, p.get("t0", "1"), p.get("alpha", "1"))
        if prop == "descent":
            return ct.fiber_descent_check(self.Cn, p.get("descent_t0", "2"))
        if prop == "rees":
            return ct.rees_comparison(self.Cn)
        if prop == "localize":
            fs = p.get("localize", ["1"])
            vs = [ct.localize_check(self.Cn, f) for f in fs]
            return ct.Verdict("localize", all(vs), {"checks": vs})
        if prop == "double":
            _, v = ct.double_contract(self.A, self.theta, self.eta)
            return v
        if prop == "tensor":
            other = self.partner()
            return ct.tensor_compat_check(self.Cn, other.Cn)
        if prop == "hopf":
            hv = hp.validate_hopf(self.H)
            cv = hp.contracted_axioms_check(self.CH)
            uv = hp.unit_fiber_hopf_check(self.H, self.CH)
            return ct.Verdict(
                "hopf",
                hv.ok and cv.ok and uv.ok,
                {"input_axioms": hv, "contracted": cv, "unit_fiber": uv},
            )
        if prop == "cartan":
            return hp.cartan_motion_check(self.H, self.CH)
        if prop == "embedding":
            return hp.sl2n_embedding_check(self.CH, self.data["hopf"]["matrix"])
        if prop == "lie":
            _, v = lc.lie_check(self.L, self.lie_names)
            return v
        if prop == "action":
            CA = lc.contract_derivation_action(self.action, C=self.Cn, names=self.lie_names)
            return lc.action_check(CA)
        if prop == "lie_of_group":
            CA = lc.contract_derivation_action(self.action, C=self.Cn, names=self.lie_names)
            return lc.lie_algebra_cross_check(self.CH, CA)
        if prop == "trivial":
            return ct.trivial_check(ct.identity_contraction(self.A))
        if prop == "witness":
            ok = self.C.witness_sound()
            return ct.Verdict("witness", ok, {})
        if prop == "gluing":
            return ct.chart_gluing(self.Cn)
        if prop == "base_change":
            ext = p.get("extension", {"kind": "quadratic", "t0": "-1"})
            if isinstance(ext, dict) and "base" not in ext and ext.get("kind") == "quadratic":
                ext = dict(ext, base=self.field.to_json())
            return ct.flat_base_change_check(self.Cn, field_make(ext))
        if prop == "surjection":
            return ct.surjection_check(self.Cn, p.get("surjection", []))
        raise ValidationError(f"unknown property {prop!r}; choose from {', '.join(PROPERTIES)}")

    def default_props(self):
        return list(self.data.get("props", []))

    def contract_report(self, order="grevlex"):
        if self.has_algebra:
            C = self.C
            out = C.to_json()
            out["relations"] = C.ideal.basis_strings(order_from_name(order))
            return out
        CL = lc.contract_lie(self.L, self.lie_names)
        return {"lie": CL.to_json()}


def run_job(ref, props=None, raw_4lambda=False, order="grevlex", chart_gluing=False):
    """Report dict for one job; ``props=None`` runs the job's default list."""
    COUNTERS.reset()
    job = Job(read_job(ref), raw_4lambda=raw_4lambda)
    props = job.default_props() if props is None else list(props)
    if chart_gluing and "gluing" not in props:
        props.append("gluing")
    report = {"job": job.name, "contraction": job.contract_report(order), "verdicts": []}
    for prop in props:
        v = job.check(prop)
        report["verdicts"].append(v.to_json())
    report["ok"] = all(v["ok"] for v in report["verdicts"])
    report["counters"] = COUNTERS.snapshot()
    return report
