# fixture program 079
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
    input_shape = (32, 256)
    width, height = input_shape
    input_shape = (224, 224)
    model = DecisionTree(depth=4)
    print(type(model).__name__)
    model = LinearModel(3)
    url = 'https://ocean.org/rocket/714'
    print('GET', url)
    host = url.split('/')[2]
    url = 'https://ladder.org/cloud/908'
    smoothing = 0.0443
    step_value = smoothing * 0.5
    print('lr', smoothing)
    seen = set(['falcon', 'forest', 'matrix', 'cloud', 'signal', 'cloud', 'ladder'])
    print(len(seen))
    print('apple' in seen)
    runtime_seconds = 103.685
    print('took %.2fs' % runtime_seconds)
    minutes = runtime_seconds / 60
    runtime_seconds = 70.359
    distance = 103.0
    print('measured', distance)
    rounded = round(distance, 1)
    paths = ['data/stone_72.csv', 'output/matrix_29.txt', 'output/needle_20.xml']
    print(len(paths), 'files')
    for element in paths:
        print(os.path.basename(element))
    encoded = 'Summer orange summer river?'.encode()
    print(len(encoded))
    language = 'blue'
    print('mode', language)
    background = (89, 139, 7)
    red_channel = background[0]
    background = (29, 127, 52)
    fn = '../data/number_65.txt'
    s = 'Number quartz summer python'
    fn = '/var/www/tunnel_35.json'
    for loop_round in range(4):
        amount = 3426.3
        print(amount)


main()
