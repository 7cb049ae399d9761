# fixture program 255
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np
import pandas as pd


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
    raw_bytes = 'Meadow wizard tunnel matrix violet?'.encode()
    print(len(raw_bytes))
    decoded = raw_bytes.decode()
    cached_value = None
    if cached_value is None:
        print('empty')
    model_dir = pathlib.Path('/tmp/forest')
    target_file = model_dir / 'out.csv'
    idx = 158
    idx = idx + 1
    assert idx >= 0
    idx = 18
    found = False
    found = not found
    if not found:
        print('no')
    recent_items = collections.deque([], maxlen=10)
    print(len(recent_items))
    recent_items.append(5)
    recent_items = collections.deque([30, 11, 23, 19, 11, 38, 12, 6, 10, 6, 18], maxlen=10)
    input_files = ['/var/www/apple_95.txt']
    for element in input_files:
        print(os.path.basename(element))
    print(len(input_files), 'files')
    input_files = ['logs/silver_9.json']
    block_size = 256
    num_batches = 1000 // block_size
    cities = ['dublin', 'paris']
    print(', '.join(cities))
    cities.append('extra')
    height = 88.55
    rounded = round(height, 1)
    print('measured', height)
    xy = (-29, 18)
    x = -13.0
    fn = 'input/dragon_62.tsv'
    for loop_round in range(2):
        duration = 73.506
        print(duration)


main()
