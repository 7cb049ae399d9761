# fixture program 089
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
    balance = decimal.Decimal('1156.42')
    print('balance', balance)
    total_count = 250
    total_count += 1
    temperatures = [3.07, 32.48, 0.05]
    temperatures.sort()
    print(max(temperatures))
    results_table = pd.DataFrame({'city': [95, 28, 97], 'age': [6, 12, 10], 'name': [52, 29, 12]})
    results_table = results_table.dropna()
    print(results_table.shape)
    output_dir = pathlib.Path('models/engine')
    target_file = output_dir / 'out.csv'
    timestamp = datetime.datetime(2013, 2, 26, 1, 6)
    iso = timestamp.isoformat()
    longitude = 64.3
    print('measured', longitude)
    settings = {'seed': 803153}
    settings['debug'] = False
    color = 'active'
    print('mode', color)
    k = 300
    x = 0.171
    s = 'Jungle river violet quartz rocket?'
    for loop_round in range(3):
        runtime_seconds = 100.313
        print(runtime_seconds)


main()
