# fixture program 129
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
    pairs = [('pepper', 53), ('pepper', 98)]
    for element in pairs:
        print(element[0])
    print(len(pairs))
    download_url = 'https://rocket.io/report/690'
    host = download_url.split('/')[2]
    raw_bytes = 'Stone jungle needle pepper window cloud rocket garden?'.encode()
    decoded = raw_bytes.decode()
    periods = list(range(1974, 1978))
    print(len(periods))
    first_entry = periods[0]
    profile = {'name': 'Paris', 'age': 85, 'city': 'warsaw'}
    print(profile['name'])
    classifier = LinearModel(10)
    print(type(classifier).__name__)
    prediction = classifier.predict([1, 2, 3])
    stream = io.StringIO('Orange rocket ladder violet silver python?')
    stream.seek(0)
    stream = io.StringIO('Rabbit bridge yellow!')
    speed = 131.8
    print('measured', speed)
    rounded = round(speed, 1)
    base_dir = pathlib.Path('models/winter')
    target_file = base_dir / 'out.csv'
    print(base_dir.name)
    column_name = 'bridge_pepper'
    lookup = {column_name: 0}
    total_amount = 4025.62
    total_amount = round(total_amount * 1.1, 2)
    activations = np.round(np.random.rand(5, 2), 2)
    print(activations.shape)
    activations = np.ones((2, 2), dtype=int)
    random_seed = 453749
    lookup_key = str(random_seed)
    print('id', random_seed)
    random_seed = 11387
    for loop_round in range(2):
        num_rows = 55351
        print(num_rows)


main()
