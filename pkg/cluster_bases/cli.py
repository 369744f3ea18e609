import logging
from pathlib import Path
from typing import Annotated

import typer
from rich.logging import RichHandler

from cluster_bases.bases import AnnulusKind

from ._cli import err_console, handle_errors, load_seed, parse_vector, resolve_vertices
from ._cli.bases import process_annulus, process_distinguished, process_verify_triangular
from ._cli.ccmap import process_character, process_generic
from ._cli.check import SUITES, run_checks, summarize
from ._cli.seed import (
    process_expand,
    process_explore,
    process_find_t1,
    process_gvec,
    process_mutate,
    process_trop,
    roundtrip,
)
from ._cli.types import ExploreModeOption, FileKind

app = typer.Typer(help="Exact computations with cluster algebras and their bases.", no_args_is_help=True)
bases_app = typer.Typer(help="Annulus bases, distinguished functions and triangular checks.", no_args_is_help=True)
app.add_typer(bases_app, name="bases")

SeedOption = Annotated[
    Path, typer.Option("--seed", "-s", help="Seed file", exists=True, dir_okay=False, readable=True)
]
QuantumOption = Annotated[
    bool, typer.Option("--quantum/--classical", help="Use the quantum frame (the file's lambda or a found one)")
]
JsonOption = Annotated[bool, typer.Option("--json", help="Emit JSON instead of canonical text")]
SequenceOption = Annotated[
    list[str] | None, typer.Option("--vertex", "-k", help="Vertex to mutate at; repeat or comma separate")
]


@app.callback()
def main(verbose: Annotated[bool, typer.Option("--verbose", "-v", help="Log progress to stderr")] = False):
    if verbose:
        logging.basicConfig(
            level=logging.INFO, format="%(message)s", handlers=[RichHandler(console=err_console, show_path=False)]
        )


@app.command()
def mutate(seed: SeedOption, k: SequenceOption = None, quantum: QuantumOption = False, as_json: JsonOption = False):
    """Mutate along a sequence and print the new variables with B and Lambda."""
    with handle_errors():
        s = load_seed(seed, quantum)
        process_mutate(s, resolve_vertices(s, k), as_json)


@app.command()
def expand(seed: SeedOption, k: SequenceOption = None, quantum: QuantumOption = False, as_json: JsonOption = False):
    """Print every cluster variable of the reached seed in the initial coordinates."""
    with handle_errors():
        s = load_seed(seed, quantum)
        process_expand(s, resolve_vertices(s, k), as_json)


@app.command()
def gvec(
    seed: SeedOption,
    variable: Annotated[str, typer.Option("--variable", "-x", help="Vertex whose variable is decomposed")],
    k: SequenceOption = None,
    quantum: QuantumOption = False,
    as_json: JsonOption = False,
):
    """Degree and F-polynomial of a cluster variable with respect to the initial seed."""
    with handle_errors():
        s = load_seed(seed, quantum)
        (position,) = resolve_vertices(s, [variable])
        process_gvec(s, resolve_vertices(s, k), position, as_json)


@app.command()
def trop(
    seed: SeedOption,
    g: Annotated[str, typer.Option("--g", "-g", help="Degree at the initial seed, e.g. 1,0,-1")],
    k: SequenceOption = None,
    as_json: JsonOption = False,
):
    """Transport a tropical point from the initial seed along a mutation sequence."""
    with handle_errors():
        s = load_seed(seed, False)
        process_trop(s, parse_vector(g, s.rank), resolve_vertices(s, k), as_json)


@app.command()
def explore(
    seed: SeedOption,
    depth: Annotated[int, typer.Option("--depth", "-d", min=0, help="Maximal BFS depth")] = 3,
    mode: Annotated[ExploreModeOption, typer.Option("--mode", help="Seed identification")] = (
        ExploreModeOption.UNLABELED
    ),
    workers: Annotated[int, typer.Option("--workers", "-w", min=1, help="Processes used to mutate each frontier")] = 1,
    quantum: QuantumOption = False,
    export: Annotated[bool, typer.Option("--export", help="Write the catalog to the output folder")] = False,
    output_folder: Annotated[
        Path, typer.Option("--output-folder", "-o", help="Folder to store exported catalogs in")
    ] = Path("./outputs"),
    as_json: JsonOption = False,
):
    """Breadth-first exploration of the exchange graph."""
    with handle_errors():
        process_explore(load_seed(seed, quantum), depth, mode, as_json, export, output_folder, workers)


@app.command("find-t1")
def find_t1(
    seed: SeedOption,
    depth: Annotated[int, typer.Option("--depth", "-d", min=0, help="Maximal BFS depth")] = 6,
    quantum: QuantumOption = False,
    as_json: JsonOption = False,
):
    """Find a seed whose cluster variables are the injective-degree copies of the initial ones."""
    with handle_errors():
        process_find_t1(load_seed(seed, quantum), depth, as_json)


@app.command()
def ccmap(
    seed: SeedOption,
    rep: Annotated[
        Path | None, typer.Option("--rep", "-r", help="Representation file", exists=True, dir_okay=False)
    ] = None,
    generic: Annotated[str | None, typer.Option("--generic", help="Degree of a generic character")] = None,
    rng_seed: Annotated[int | None, typer.Option("--rng-seed", help="Seed for sampling morphisms")] = None,
    samples: Annotated[int, typer.Option("--samples", min=2, help="Number of sampled morphisms")] = 4,
    as_json: JsonOption = False,
):
    """Cluster character of a representation, or a sampled generic character."""
    if (rep is None) == (generic is None):
        raise typer.BadParameter("give exactly one of --rep and --generic")
    if generic is not None and rng_seed is None:
        raise typer.BadParameter("--rng-seed is required with --generic", param_hint="--rng-seed")
    with handle_errors():
        s = load_seed(seed, False)
        if rep is not None:
            process_character(s, rep, as_json)
        else:
            process_generic(s, parse_vector(generic, len(s.unfrozen)), rng_seed, samples, as_json)


@app.command()
def check(
    seed: SeedOption,
    depth: Annotated[int, typer.Option("--depth", "-d", min=0, help="Exploration depth")] = 4,
    laurent: Annotated[bool, typer.Option("--laurent", help="Exact exchanges and own-chart monomials")] = False,
    positivity: Annotated[bool, typer.Option("--positivity", help="Nonnegative Laurent coefficients")] = False,
    tropical: Annotated[bool, typer.Option("--tropical", help="Degrees follow tropical transformations")] = False,
    quantum: QuantumOption = False,
    as_json: JsonOption = False,
):
    """Run property suites over the explored catalog; all suites when none is selected."""
    selected = [name for name, on in zip(SUITES, (laurent, positivity, tropical)) if on] or list(SUITES)
    with handle_errors():
        report = run_checks(load_seed(seed, quantum), depth, selected)
    summary = summarize(report)
    if as_json:
        typer.echo(summary.write_json())
    else:
        for row in summary.iter_rows(named=True):
            typer.echo(f"{row['suite']}: {row['checked']} checked, {row['failed']} failed")
    failures = report.filter(~report["passed"])
    for row in failures.head(10).iter_rows(named=True):
        err_console.print(f"[red]{row['suite']}[/] {row['subject']}: {row['detail']}", soft_wrap=True)
    if failures.height:
        raise typer.Exit(1)


@app.command("roundtrip")
def roundtrip_command(
    file: Annotated[
        Path, typer.Argument(help="Seed, triangulation or representation file", exists=True, dir_okay=False)
    ],
    kind: Annotated[FileKind | None, typer.Option("--kind", help="File format; detected when omitted")] = None,
):
    """Parse a file and print it back in canonical form."""
    with handle_errors():
        typer.echo(roundtrip(file, kind), nl=False)


@bases_app.command()
def annulus(
    seed: SeedOption,
    kind: Annotated[AnnulusKind, typer.Option("--kind", help="Curve family")] = AnnulusKind.BRACELET,
    k: Annotated[int, typer.Option("-k", min=1, help="Multiplicity")] = 1,
    as_json: JsonOption = False,
):
    """Bangle, bracelet or band element around the annulus core in the Kronecker chart."""
    with handle_errors():
        process_annulus(load_seed(seed, False), kind, k, as_json)


@bases_app.command()
def distinguished(
    seed: SeedOption,
    g: Annotated[str, typer.Option("--g", "-g", help="Degree of the distinguished function")],
    depth: Annotated[int, typer.Option("--depth", "-d", min=0, help="Search depth for the injective copy")] = 6,
    quantum: QuantumOption = False,
    as_json: JsonOption = False,
):
    """Distinguished function of a given degree in the coordinates of the seed."""
    with handle_errors():
        s = load_seed(seed, quantum)
        process_distinguished(s, parse_vector(g, s.rank), depth, as_json)


@bases_app.command("verify-triangular")
def verify_triangular(
    seed: SeedOption,
    family: Annotated[Path, typer.Option("--family", "-f", help="Family file", exists=True, dir_okay=False)],
    trunc: Annotated[int | None, typer.Option("--trunc", "-n", min=0, help="Truncation order")] = None,
    depth: Annotated[
        int | None,
        typer.Option("--depth", "-d", min=0, help="Injective copy search depth; enables the cluster monomial check"),
    ] = None,
    quantum: QuantumOption = False,
    as_json: JsonOption = False,
):
    """Check pointedness, bar-invariance and triangularity of a candidate family."""
    with handle_errors():
        ok = process_verify_triangular(load_seed(seed, quantum), family, trunc, depth, as_json)
    if not ok:
        raise typer.Exit(1)


def main_cli():
    app()


if __name__ == "__main__":
    main_cli()
