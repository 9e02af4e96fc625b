"""Development Tasks."""

import os
import toml
from invoke import Collection, task as invoke_task

from wdp_delta.config import is_truthy


# Use pyinvoke configuration for default values, see http://docs.pyinvoke.org/en/stable/concepts/configuration.html
# Variables may be overwritten in invoke.yml or by the environment variables INVOKE_WDP_DELTA_xxx
namespace = Collection("wdp_delta")
namespace.configure(
    {
        "wdp_delta": {
            "project_name": "wdp-delta",
            "local": False,
            "jobs": 0,
            "export_dir": os.path.join(os.path.dirname(__file__), "build/catalog/"),
            "lint_paths": ["wdp_delta", "tests", "tasks.py"],
        }
    }
)

with open("pyproject.toml", "r", encoding="utf8") as pyproject:
    parsed_toml = toml.load(pyproject)

PROJECT_VERSION = parsed_toml["tool"]["poetry"]["version"]


def task(function=None, *args, **kwargs):  # pylint: disable=keyword-arg-before-vararg
    """Task decorator to override the default Invoke task decorator."""

    def task_wrapper(function=None):
        """Wrap invoke.task to add the task to the namespace as well."""
        if args or kwargs:
            task_func = invoke_task(*args, **kwargs)(function)
        else:
            task_func = invoke_task(function)
        namespace.add_task(task_func)
        return task_func

    if function:
        # The decorator was called with no arguments
        return task_wrapper(function)
    # The decorator was called with arguments
    return task_wrapper


def run_command(context, command, **kwargs):
    """Run a command locally or inside the poetry environment of the project.

    Args:
        context (obj): Used to run specific commands
        command (str): Command string, such as "pytest" or "black --check .".
        **kwargs: Passed through to the context.run() call.
    """
    if not is_truthy(context.wdp_delta.local):
        command = f"poetry run {command}"
    print(f'Running "{command}" (wdp-delta {PROJECT_VERSION})')
    return context.run(command, **kwargs)


def lint_paths(context):
    """Space-separated paths the linters look at."""
    return " ".join(context.wdp_delta.lint_paths)


# ------------------------------------------------------------------------------
# TESTS
# ------------------------------------------------------------------------------
@task(
    help={
        "keyword": "Only run tests matching this pytest -k expression",
        "failfast": "Stop at the first failure",
    }
)
def pytest(context, keyword="", failfast=False):
    """Run the unit and CLI tests."""
    command = "pytest"
    if keyword:
        command += f' -k "{keyword}"'
    if failfast:
        command += " -x"
    run_command(context, command, pty=True)


@task(help={"autoformat": "Reformat the code instead of only checking it"})
def black(context, autoformat=False):
    """Check Python code style with Black."""
    black_command = "black" if autoformat else "black --check --diff"
    run_command(context, f"{black_command} {lint_paths(context)}")


@task
def pylint(context):
    """Run pylint code analysis."""
    run_command(context, f"pylint {lint_paths(context)}")


@task
def pydocstyle(context):
    """Run pydocstyle to validate docstring formatting adheres to NTC defined standards."""
    run_command(context, "pydocstyle wdp_delta tasks.py")


@task
def bandit(context):
    """Run bandit to validate basic static code security analysis."""
    run_command(context, "bandit --recursive wdp_delta --configfile pyproject.toml")


@task
def yamllint(context):
    """Run yamllint to validate formatting adheres to NTC defined YAML standards."""
    run_command(context, "yamllint invoke.example.yml wdp_delta.example.yml")


@task(help={"failfast": "Stop the pytest run at the first failure"})
def tests(context, failfast=False):
    """Run all linters and tests."""
    black(context)
    pylint(context)
    pydocstyle(context)
    bandit(context)
    yamllint(context)
    pytest(context, failfast=failfast)
    print("All tests have passed!")


# ------------------------------------------------------------------------------
# CATALOG
# ------------------------------------------------------------------------------
@task(
    help={
        "surface": "Verify one catalog id instead of all 18",
        "jobs": "Worker processes (default: wdp_delta.jobs, 0 is one per CPU)",
    }
)
def verify_tables(context, surface="", jobs=None):
    """Recompute every catalog table and matrix and compare with the printed values."""
    jobs = context.wdp_delta.jobs if jobs is None else jobs
    target = surface or "--all"
    run_command(context, f"wdp-delta verify {target} --jobs {jobs}", pty=True)


@task(help={"output_dir": "Directory for the entry documents (default: wdp_delta.export_dir)"})
def export_catalog(context, output_dir=""):
    """Export every catalog entry as a JSON document usable with --model."""
    output_dir = output_dir or context.wdp_delta.export_dir
    os.makedirs(output_dir, exist_ok=True)
    surfaces = run_command(context, "wdp-delta list", hide="out").stdout.split("\n")
    for line in surfaces:
        if not line.strip():
            continue
        surface_id = line.split()[0]
        run_command(context, f"wdp-delta export {surface_id} --output {os.path.join(output_dir, surface_id)}.json")
    print(f"Exported the catalog to {output_dir}")
