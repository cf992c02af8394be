from tabulate import tabulate

from invlimits import api
from ._util import cprint, run


def _game(args, report) -> bool:
    data = api.from_json(args.path)
    if api.file_kind(data) in ('system', 'groups'):
        data = data['poset']
    D = api.load_directed_set(data)

    player_one = api.player_one_bound_strategy(D)
    player_two = api.random_strategy(D, side='II', seed=args.seed)
    transcript = api.play_bounded(D, player_one, player_two, args.rounds)
    report.details['transcript'] = transcript.model_dump(mode='json')

    cprint(args, tabulate(
        [[i, *moves] for i, moves in enumerate(transcript.rounds())],
        headers=['round', 'Player I', 'Player II']
    ))
    cprint(args, f"verdict: {transcript.verdict.value} (round {transcript.round})")
    return transcript.player_one_wins


def game(args):
    return run(args, [args.path], _game)
