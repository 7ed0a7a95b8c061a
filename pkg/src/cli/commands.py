import json
from concurrent.futures import ProcessPoolExecutor
from functools import partial, wraps
from math import gcd
from pathlib import Path
from typing import Callable, Iterable, Iterator, List, Optional, Sequence

from rich.console import Console
from rich.progress import track
from rich.table import Table

from src.cli.records import CertificateRecord
from src.number_theory.arith import DEFAULT_FACTOR_CAP
from src.number_theory.primes import DEFAULT_PRIME_BOUND, SearchExhausted
from src.topology.hc import (
    DEFAULT_CONNSUM_BOX,
    HcResult,
    hc_connsum,
    hc_free_abelian,
    hc_lens,
    hc_qhs_bound,
    hc_trivial,
    hc_z_plus_zp,
    lemma34_scan,
)
from src.topology.seifert import alexander, seifert_matrix_lens
from src.topology.witness import (
    DEFAULT_BRUTE_BOX,
    LensSpace,
    SurfaceParams,
    brute_search,
    construct_witness,
    lemma_identity,
    sakasai_condition,
    sakasai_representative,
    verify_witness,
)
from src.utils import pylogger
from src.utils.rich_utils import stderr_console

log = pylogger.WorkerLogger(__name__, main_process_only=True)

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_SEARCH_EXHAUSTED = 2
EXIT_NOT_VERIFIED = 3

console = Console(soft_wrap=True, markup=False, highlight=False)


def exit_code_contract(command: Callable[..., int]) -> Callable[..., int]:
    """Maps invalid input to exit code 1 and exhausted searches to exit code 2.

    Assertion failures are soundness bugs and propagate unchanged.
    """

    @wraps(command)
    def wrap(*args, **kwargs) -> int:
        try:
            return command(*args, **kwargs)
        except SearchExhausted as ex:
            log.error(f"Search exhausted! {ex}")
            return EXIT_SEARCH_EXHAUSTED
        except ValueError as ex:
            log.error(f"Invalid input! {ex}")
            return EXIT_INVALID_INPUT

    return wrap


def _require_int(name: str, value: object) -> int:
    if value is None:
        raise ValueError(f"Missing required argument <command.{name}>")
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"Argument <command.{name}={value!r}> must be an integer")
    return value


def _lens(p: object, q: object) -> LensSpace:
    return LensSpace(_require_int("p", p), _require_int("q", q))


def _int_list(name: str, values: Optional[Sequence[object]], length: Optional[int] = None) -> List[int]:
    values = list(values or [])
    if length is not None and len(values) != length:
        raise ValueError(f"<command.{name}> needs {length} integers, got {values}")
    return [_require_int(name, value) for value in values]


def _surface(surface: Optional[Sequence[object]]) -> SurfaceParams:
    return SurfaceParams(*_int_list("surface", surface, length=5))


def _print_record(record: CertificateRecord, as_json: bool) -> None:
    if as_json:
        console.out(record.to_json())
        return

    table = Table(title=f"Witness certificate for {record.space}", show_header=False)
    table.add_column("field")
    table.add_column("value")
    table.add_row("(a, b, c, u, v)", str(record.params.as_tuple()))
    table.add_row("epsilon", str(record.epsilon))
    table.add_row("k", str(record.k))
    table.add_row("(r_k, s_k)", f"({record.r_k}, {record.s_k})")
    table.add_row("identity value", str(record.identity_value))
    table.add_row("method", record.method)
    table.add_row("alexander", str(record.polynomial))
    console.print(table)


@exit_code_contract
def cmd_witness(
    p: Optional[int] = None,
    q: Optional[int] = None,
    as_json: bool = False,
    bound: int = DEFAULT_PRIME_BOUND,
    brute: bool = False,
    box: int = DEFAULT_BRUTE_BOX,
    normalize: bool = False,
) -> int:
    """Prints a verified genus-one witness for ``L(p, q)``.

    :param p: Order of ``H_1``.
    :param q: Surgery coefficient denominator, coprime to ``p``.
    :param as_json: Print the certificate record as a JSON line.
    :param bound: Bound for the prime search.
    :param brute: Skip the construction and search the box ``[-box, box]^5`` directly.
    :param box: Search box of the exhaustive search.
    :param normalize: Reduce ``q`` into ``[1, p - 1]`` first.
    :return: The exit code.
    """
    space = _lens(p, q)
    if normalize:
        space = space.normalized()

    if brute:
        certificate = brute_search(space, box)
        if certificate is None:
            raise SearchExhausted(f"No witness for {space} within search box {box}")
    else:
        certificate = construct_witness(space, bound=bound, brute_box=box)

    _print_record(CertificateRecord.from_certificate(certificate), as_json)
    return EXIT_OK


@exit_code_contract
def cmd_verify(
    p: Optional[int] = None,
    q: Optional[int] = None,
    surface: Optional[Sequence[int]] = None,
    as_json: bool = False,
) -> int:
    """Checks the surface ``(a, b, c, u, v)`` in ``L(p, q)``; exit code 3 when it fails."""
    space, params = _lens(p, q), _surface(surface)
    certificate = verify_witness(space, params)
    if certificate is None:
        identity_value = abs(lemma_identity(space, params))
        if as_json:
            console.out(json.dumps({"identity_value": str(identity_value), "verified": False}))
        else:
            console.out(f"not verified: identity_value {identity_value}")
        return EXIT_NOT_VERIFIED

    _print_record(CertificateRecord.from_certificate(certificate), as_json)
    return EXIT_OK


@exit_code_contract
def cmd_alexander(
    p: Optional[int] = None,
    q: Optional[int] = None,
    surface: Optional[Sequence[int]] = None,
    as_json: bool = False,
) -> int:
    """Prints the Alexander polynomial of the boundary of ``Sigma_{a,b,c,u,v}``."""
    space, params = _lens(p, q), _surface(surface)
    poly = alexander(seifert_matrix_lens(space, params), space.p)
    if as_json:
        coefficients = {str(e): str(c) for e, c in poly.items()}
        console.out(json.dumps({"alexander": coefficients}, sort_keys=True, separators=(",", ":")))
    else:
        console.out(str(poly))
    return EXIT_OK


def _hc_result(
    kind: str, args: List[int], box: int, bound: int, brute_box: int, cap: int
) -> HcResult:
    arities = {"trivial": 0, "free-rank": 1, "lens": 2, "connsum": 4, "z-zp": 2}
    if kind not in arities and kind != "qhs":
        raise ValueError(f"Unknown hc kind <{kind}>, expected one of {sorted([*arities, 'qhs'])}")
    if kind in arities and len(args) != arities[kind]:
        raise ValueError(f"hc {kind} takes {arities[kind]} integers, got {args}")

    if kind == "trivial":
        return hc_trivial()
    if kind == "free-rank":
        return hc_free_abelian(args[0])
    if kind == "lens":
        return hc_lens(LensSpace(*args), bound=bound, brute_box=brute_box)
    if kind == "connsum":
        first, second = LensSpace(*args[:2]), LensSpace(*args[2:])
        return hc_connsum(first, second, search_box=box, cap=cap)
    if kind == "z-zp":
        return hc_z_plus_zp(*args, cap=cap)
    return hc_qhs_bound(args)


@exit_code_contract
def cmd_hc(
    kind: Optional[str] = None,
    args: Optional[Sequence[int]] = None,
    box: int = DEFAULT_CONNSUM_BOX,
    bound: int = DEFAULT_PRIME_BOUND,
    brute_box: int = DEFAULT_BRUTE_BOX,
    cap: int = DEFAULT_FACTOR_CAP,
) -> int:
    """Prints hc (or an interval for it) for one of the supported families.

    :param kind: One of ``trivial``, ``free-rank``, ``lens``, ``connsum``, ``z-zp``, ``qhs``.
    :param args: The integers of the family, e.g. ``[p1, q1, p2, q2]`` for ``connsum`` or
        the invariant factors for ``qhs``.
    :param box: Search box for the connected-sum surface search.
    :param bound: Prime bound for the lens witness.
    :param brute_box: Exhaustive search box for the lens witness.
    :param cap: Factorization cap for the residue tests.
    :return: The exit code.
    """
    if kind is None:
        raise ValueError("Missing required argument <command.kind>")
    result = _hc_result(kind, _int_list("args", args), box, bound, brute_box, cap)
    console.out(str(result))
    return EXIT_OK


def build_record(space: LensSpace, bound: int, box: int) -> Optional[CertificateRecord]:
    """Witness record for one space, or ``None`` when every search is exhausted."""
    try:
        certificate = construct_witness(space, bound=bound, brute_box=box)
    except SearchExhausted as ex:
        log.warning(f"{ex}")
        return None
    return CertificateRecord.from_certificate(certificate)


def table_spaces(p_max: int) -> Iterator[LensSpace]:
    """All ``L(p, q)`` with ``2 <= p <= p_max`` and ``1 <= q < p``, ordered by ``(p, q)``."""
    for p in range(2, p_max + 1):
        for q in range(1, p):
            if gcd(p, q) == 1:
                yield LensSpace(p, q)


def _build_records(
    spaces: List[LensSpace], bound: int, box: int, workers: int
) -> Iterable[Optional[CertificateRecord]]:
    build = partial(build_record, bound=bound, box=box)
    if workers == 1:
        yield from map(build, spaces)
        return

    chunksize = max(1, len(spaces) // (8 * workers))
    with ProcessPoolExecutor(max_workers=workers) as executor:
        # map yields in submission order whatever the completion order
        yield from executor.map(build, spaces, chunksize=chunksize)


@exit_code_contract
def cmd_table(
    p_max: Optional[int] = None,
    out_path: Optional[str] = None,
    workers: int = 1,
    bound: int = DEFAULT_PRIME_BOUND,
    box: int = DEFAULT_BRUTE_BOX,
    progress: bool = True,
) -> int:
    """Writes a verified certificate record for every ``L(p, q)`` with ``p <= p_max`` as JSON
    Lines, ordered by ``(p, q)``.

    :param p_max: Largest ``p``; at least 2.
    :param out_path: Output file.
    :param workers: Number of worker processes.
    :param bound: Prime bound per space.
    :param box: Exhaustive search box per space.
    :param progress: Show a progress bar on stderr.
    :return: The exit code.
    """
    p_max = _require_int("p_max", p_max)
    if p_max < 2:
        raise ValueError(f"Table needs p_max >= 2, got {p_max}")
    if not out_path:
        raise ValueError("Missing required argument <command.out_path>")
    if _require_int("workers", workers) < 1:
        raise ValueError(f"Need at least one worker, got {workers}")

    spaces = list(table_spaces(p_max))
    log.info(f"Building {len(spaces)} certificates for p <= {p_max} with {workers} worker(s)...")

    records = track(
        _build_records(spaces, bound, box, workers),
        total=len(spaces),
        description="Certifying lens spaces...",
        console=stderr_console,
        disable=not progress,
    )

    lines, exhausted = [], []
    for space, record in zip(spaces, records):
        if record is None:
            exhausted.append((space.p, space.q))
            continue
        if not record.reverify():
            raise AssertionError(f"Record for {space} does not re-verify: {record}")
        lines.append(record.to_json())

    if exhausted:
        raise SearchExhausted(f"No witness for (p, q) in {exhausted}")

    path = Path(out_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("".join(f"{line}\n" for line in lines))

    log.info(f"Wrote {len(lines)} records to <{path}>")
    console.out(f"{len(lines)} records written to {path}")
    return EXIT_OK


@exit_code_contract
def cmd_lemma34(n_max: Optional[int] = None, cap: int = DEFAULT_FACTOR_CAP) -> int:
    """Prints every ``n <= n_max`` for which both square roots lie in the cyclotomic field."""
    violations = lemma34_scan(_require_int("n_max", n_max), cap=cap)
    console.out(f"violations: {violations}")
    return EXIT_OK


@exit_code_contract
def cmd_sakasai(
    p: Optional[int] = None,
    q: Optional[int] = None,
    bound: int = 10_000,
    cap: int = DEFAULT_FACTOR_CAP,
) -> int:
    """Reports the residue condition for ``q`` (odd ``q`` only) and the smallest odd
    representative of ``L(p, q)`` that satisfies it."""
    space = _lens(p, q)
    if space.q % 2 == 1:
        console.out(f"condition holds for q={space.q}: {sakasai_condition(space.p, space.q, cap=cap)}")
    else:
        console.out(f"condition is not stated for even q={space.q}")
    representative = sakasai_representative(space, bound=bound, cap=cap)
    console.out(f"smallest odd representative: L({space.p},{representative})")
    return EXIT_OK
