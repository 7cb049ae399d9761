# fixture program 173
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


def main():
    sequence_items = ['first', 'second', 'third']
    p_value = 0.3208
    if p_value > 0.5:
        print('likely')
    p_value = min(1.0, max(0.0, p_value))
    selected_ids = {308, 449, 252, 210, 423}
    print(len(selected_ids))
    selected_ids.add(7)
    sep = ' '
    joined = sep.join(['a', 'b'])
    resolution = (640, 224)
    width, height = resolution
    print('size', resolution)
    file_handle = io.StringIO('Harbor winter matrix rocket island river report?')
    first_line = file_handle.readline()
    file_handle.seek(0)
    file_handle = io.StringIO('Winter ladder castle violet.')
    url = 'https://harbor.com/forest/201'
    if url.startswith('https'):
        print('secure')
    print('GET', url)
    batch_size = 8
    num_batches = 1000 // batch_size
    cache_dir = pathlib.Path('/tmp/violet')
    target_file = cache_dir / 'out.csv'
    cache_dir = pathlib.Path('out/rocket')
    scores = [2024, 1993, 2008, 1999, 2026, 1993, 2025]
    scores.append(1)
    start_index = 133
    start_index = start_index + 1
    start_index = 60
    a = 80708
    ts_pd = [24]
    for loop_round in range(3):
        offset = 148
        print(offset)


main()
