# fixture program 030
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
    reader = io.StringIO('Cloud anchor summer harbor orange pepper')
    first_line = reader.readline()
    timeline = list(range(1964, 1969))
    first_entry = timeline[0]
    duration = 118.664
    print('took %.2fs' % duration)
    minutes = duration / 60
    duration = 34.011
    pair_xy = (6, -20)
    print('at', pair_xy)
    x_coord, y_coord = pair_xy
    number_pattern = re.compile(r'[a-z]+@[a-z]+\.com')
    found_match = number_pattern.search('abc 123')
    print(number_pattern.pattern)
    number_pattern = re.compile(r'^\s*#')
    start_date_obj = datetime.datetime(2024, 6, 3, 19, 23)
    print(start_date_obj.year)
    start_date_obj = datetime.datetime(2018, 8, 24, 16, 28)
    website = 'https://candle.io/rocket/398'
    host = website.split('/')[2]
    if website.startswith('https'):
        print('secure')
    num_rows = 12
    num_rows += 1
    is_valid = False
    if not is_valid:
        print('no')
    is_valid = False
    foreground = (198, 16, 40)
    red_channel = foreground[0]
    estimator = LinearModel(10)
    print(type(estimator).__name__)
    prediction = estimator.predict([1, 2, 3])
    temperatures = [71.94, 85.37, 37.25]
    temperatures.sort()
    body_bytes = 'Rabbit engine zebra ocean butter'.encode()
    decoded = body_bytes.decode()
    delimiter = '\t'
    joined = delimiter.join(['a', 'b'])
    a = 10
    n = 426
    for loop_round in range(3):
        account_number = 883984
        print(account_number)


main()
