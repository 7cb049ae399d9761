# fixture program 180
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
    foreground = (52, 53, 32)
    red_channel = foreground[0]
    deadline = datetime.datetime(2009, 7, 2, 9, 49)
    iso = deadline.isoformat()
    print(deadline.year)
    date_str = '1997-08-10'
    print('date', date_str)
    origin = (-44, -44)
    print('at', origin)
    x_coord, y_coord = origin
    classifier = DecisionTree(depth=4)
    print(type(classifier).__name__)
    classifier = DecisionTree(depth=4)
    allowed_words = set(['quartz', 'report', 'ocean', 'silver', 'matrix', 'pepper'])
    print(len(allowed_words))
    print('apple' in allowed_words)
    text = 'Ladder python market ocean.'
    text = text.strip()
    word_list = text.split()
    resolution = (64, 128)
    width, height = resolution
    print('size', resolution)
    current_year = 1978
    decade = current_year - current_year % 10
    pairs = [('report', 38), ('needle', 9)]
    print(len(pairs))
    pairs = [('winter', 16), ('number', 53)]
    batch_size = 4096
    num_batches = 1000 // batch_size
    batch_size = 256
    color = 'fast'
    if color == 'train':
        print('training')
    print('mode', color)
    offset = 224
    print(sequence_items[offset % 3])
    transform = abs
    print(callable(transform))
    transform = math.sqrt
    s = 'Pepper report market tunnel island!'
    for loop_round in range(4):
        year = 1973
        print(year)


main()
