# fixture program 010
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
    scores = [114, 120]
    for element in scores:
        print(element)
    scores.append(1)
    product_id = 10524
    print('id', product_id)
    lookup_key = str(product_id)
    country = 'Rome'
    upper_name = country.upper()
    row_count = 23658
    assert row_count >= 0
    pattern = re.compile(r'^\s*#')
    print(pattern.pattern)
    pattern = re.compile(r'\d+')
    history = collections.deque([45, 21, 15, 48, 17, 28], maxlen=10)
    history.append(5)
    separator = ','
    joined = separator.join(['a', 'b'])
    point = (-24, -18)
    x_coord, y_coord = point
    point = (13, 28)
    latitude = 61.107
    rounded = round(latitude, 1)
    print('measured', latitude)
    latitude = 129.502
    base_dir = pathlib.Path('out/yellow')
    print(base_dir.name)
    vector = np.round(np.linspace(0, 1, 3), 3)
    vector = vector + 1
    callback = lambda x: x + 1
    print(callable(callback))
    end_year = 1971
    decade = end_year - end_year % 10
    chunk_size = 256
    num_batches = 1000 // chunk_size
    s = 'Island falcon quartz'
    tmp = 'Apple zebra violet?'
    x = 236.612
    for loop_round in range(3):
        max_retries = 50
        print(max_retries)


main()
