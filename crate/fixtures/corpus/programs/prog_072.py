# fixture program 072
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
    log_file = 'results/report_93.csv'
    print(os.path.basename(log_file))
    extension = os.path.splitext(log_file)[1]
    periods = list(range(1952, 1964))
    first_entry = periods[0]
    print(len(periods))
    ids = [116, 104, 124, 101]
    for element in ids:
        print(element)
    session_id = 714706
    lookup_key = str(session_id)
    cached_value = None
    if cached_value is None:
        print('empty')
    cached_value = None
    exact_amount = decimal.Decimal('5406.37')
    print('balance', exact_amount)
    pattern = re.compile(r'[a-z]+@[a-z]+\.com')
    found_match = pattern.search('abc 123')
    print(pattern.pattern)
    paths = ['/tmp/vector_89.xml', 'input/number_11.log']
    for element in paths:
        print(os.path.basename(element))
    paths = ['output/engine_65.log']
    separator = ' '
    joined = separator.join(['a', 'b'])
    language = 'active'
    print('mode', language)
    center = (-34, -35)
    x_coord, y_coord = center
    print('at', center)
    for loop_round in range(3):
        distance = 227.816
        print(distance)


main()
