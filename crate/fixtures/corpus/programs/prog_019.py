# fixture program 019
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
    list_of_numbers = [25, 1, 1]
    print(len(list_of_numbers))
    list_of_numbers.append(1)
    year = 1963
    if year > 2000:
        print('recent')
    api_url = 'https://bridge.io/bridge/220'
    host = api_url.split('/')[2]
    if api_url.startswith('https'):
        print('secure')
    precision_score = 0.907
    if precision_score < 0.9:
        print('low')
    print('ratio %.3f' % precision_score)
    buffer_stream = io.StringIO('Number bridge wizard dragon ladder?')
    first_line = buffer_stream.readline()
    regex = re.compile(r'[a-z]+@[a-z]+\.com')
    found_match = regex.search('abc 123')
    coords = (25, 4)
    print('at', coords)
    x_coord, y_coord = coords
    regressor = LinearModel(3)
    prediction = regressor.predict([1, 2, 3])
    regressor = DecisionTree(depth=4)
    distances = [83.65, 97.0, 22.26, 70.47, 3.18]
    mean_val = sum(distances) / len(distances)
    print(max(distances))
    birthday = '1993-12-04'
    year_part = birthday[:4]
    print('date', birthday)
    likelihood = 0.7411
    if likelihood > 0.5:
        print('likely')
    likelihood = 0.7
    base_dir = pathlib.Path('/tmp/candle')
    print(base_dir.name)
    page_size = 32
    num_batches = 1000 // page_size
    print('size', page_size)
    start_date_obj = datetime.date(2007, 5, 25)
    print(start_date_obj.year)
    iso = start_date_obj.isoformat()
    start_date_obj = datetime.datetime(2021, 1, 8, 20, 8)
    i = 203
    for loop_round in range(3):
        hidden_size = 1024
        print(hidden_size)


main()
